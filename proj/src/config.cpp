#include "momspec/config.hpp"

#include <fstream>
#include <sstream>

namespace momspec {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw ConfigError("config: " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& require(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object() || !obj.contains(key)) fail(pointer + "/" + key, "missing field");
  return obj.at(key);
}

double as_double(const Json& v, const std::string& pointer) {
  if (!v.is_number()) fail(pointer, "expected a number");
  return v.get<double>();
}

std::vector<double> as_doubles(const Json& v, const std::string& pointer) {
  if (!v.is_array()) fail(pointer, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_double(v[i], pointer + "/" + std::to_string(i)));
  return out;
}

template <typename F>
auto rethrow_with_pointer(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError& e) {
    std::string msg = e.what();
    if (msg.rfind("config:", 0) == 0) throw;
    fail(pointer, msg);
  }
}

}  // namespace

Complex parse_complex(const Json& v, const std::string& pointer) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(pointer, "expected a number or an [re, im] pair");
}

IntervalConfig parse_intervals(const Json& spec, const std::string& pointer) {
  if (!spec.is_object()) fail(pointer, "expected an object");
  return rethrow_with_pointer(pointer, [&] {
    if (spec.contains("betas") || spec.contains("alphas")) {
      auto b = as_doubles(require(spec, "betas", pointer), pointer + "/betas");
      auto a = as_doubles(require(spec, "alphas", pointer), pointer + "/alphas");
      return IntervalConfig(b, a);
    }
    const double b1 = as_double(require(spec, "beta1", pointer), pointer + "/beta1");
    auto g = as_doubles(require(spec, "gaps", pointer), pointer + "/gaps");
    auto l = as_doubles(require(spec, "lengths", pointer), pointer + "/lengths");
    return IntervalConfig::from_lengths(b1, g, l);
  });
}

BoundaryMatrix parse_boundary(const Json& spec, int n, bool reunitarize, const std::string& pointer) {
  if (!spec.is_object()) fail(pointer, "expected an object");
  const Json& kind_v = require(spec, "kind", pointer);
  if (!kind_v.is_string()) fail(pointer + "/kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  auto finish = [&](const CMatrix& m) {
    if (m.rows() != n) {
      std::ostringstream os;
      os << "matrix is " << m.rows() << "x" << m.cols() << " but the configuration has n = " << n;
      fail(pointer, os.str());
    }
    return rethrow_with_pointer(pointer, [&] {
      return reunitarize ? BoundaryMatrix::project(m) : BoundaryMatrix(m);
    });
  };
  return rethrow_with_pointer(pointer, [&]() -> BoundaryMatrix {
    if (kind == "explicit") {
      const Json& rows = require(spec, "matrix", pointer);
      const std::string mp = pointer + "/matrix";
      if (!rows.is_array() || rows.empty()) fail(mp, "expected a non-empty array of rows");
      const auto r = static_cast<Eigen::Index>(rows.size());
      CMatrix m(r, r);
      for (Eigen::Index i = 0; i < r; ++i) {
        const Json& row = rows[i];
        const std::string rp = mp + "/" + std::to_string(i);
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != r) fail(rp, "row length differs from row count");
        for (Eigen::Index j = 0; j < r; ++j) m(i, j) = parse_complex(row[j], rp + "/" + std::to_string(j));
      }
      return finish(m);
    }
    if (kind == "identity") return finish(CMatrix::Identity(n, n));
    if (kind == "permutation") {
      const Json& cyc = require(spec, "cycles", pointer);
      if (!cyc.is_array()) fail(pointer + "/cycles", "expected an array of cycles");
      std::vector<std::vector<int>> cycles;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const std::string cp = pointer + "/cycles/" + std::to_string(k);
        if (!cyc[k].is_array()) fail(cp, "expected an array of 1-based indices");
        std::vector<int> c;
        for (const auto& x : cyc[k]) {
          if (!x.is_number_integer()) fail(cp, "expected integers");
          c.push_back(x.get<int>());
        }
        cycles.push_back(c);
      }
      return finish(permutation_from_cycles(n, cycles).matrix());
    }
    if (kind == "diagonal") {
      return finish(diagonal_phases(as_doubles(require(spec, "phases", pointer), pointer + "/phases")).matrix());
    }
    if (kind == "su2") {
      const Complex a = parse_complex(require(spec, "a", pointer), pointer + "/a");
      const Complex b = parse_complex(require(spec, "b", pointer), pointer + "/b");
      const std::string tmpl = spec.value("template", std::string("n2"));
      CMatrix m;
      if (tmpl == "n2") {
        m.resize(2, 2);
        m << a, b, -std::conj(b), std::conj(a);
      } else if (tmpl == "case1") {
        m = CMatrix::Zero(3, 3);
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = -std::conj(b);
        m(1, 1) = std::conj(a);
        m(2, 2) = 1.0;
      } else if (tmpl == "case2") {
        m = CMatrix::Zero(3, 3);
        m(0, 1) = a;
        m(0, 2) = b;
        m(1, 1) = -std::conj(b);
        m(1, 2) = std::conj(a);
        m(2, 0) = 1.0;
      } else {
        fail(pointer + "/template", "expected one of n2, case1, case2");
      }
      return finish(m);
    }
    if (kind == "shift") {
      const Complex c = spec.contains("c") ? parse_complex(spec.at("c"), pointer + "/c") : Complex(1.0);
      if (n < 2) fail(pointer, "shift template needs n >= 2");
      CMatrix m = CMatrix::Zero(n, n);
      for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
      m(n - 1, 0) = c;
      return finish(m);
    }
    fail(pointer + "/kind", "unknown kind '" + kind + "'");
  });
}

RunConfig parse_run_config(const Json& doc) {
  if (!doc.is_object()) fail("", "expected a JSON object");
  RunConfig rc;
  if (doc.contains("reunitarize")) {
    if (!doc["reunitarize"].is_boolean()) fail("/reunitarize", "expected a boolean");
    rc.reunitarize = doc["reunitarize"].get<bool>();
  }
  if (doc.contains("intervals")) rc.intervals = parse_intervals(doc["intervals"], "/intervals");
  for (const char* key : {"boundary", "boundary2"}) {
    if (!doc.contains(key)) continue;
    if (!rc.intervals) fail(std::string("/") + key, "a boundary matrix requires an intervals section");
    auto b = parse_boundary(doc[key], rc.intervals->n(), rc.reunitarize, std::string("/") + key);
    (std::string(key) == "boundary" ? rc.boundary : rc.boundary2) = b;
  }
  if (doc.contains("infinite")) {
    const Json& inf = doc["infinite"];
    const std::string p = "/infinite";
    if (!inf.is_object()) fail(p, "expected an object");
    const Json& gen = require(inf, "generator", p);
    if (!gen.is_string()) fail(p + "/generator", "expected a string");
    InfiniteSpec spec;
    const std::string g = gen.get<std::string>();
    spec.config = rethrow_with_pointer(p, [&] {
      if (g == "cantor") return cantor_complement(static_cast<int>(as_double(require(inf, "level", p), p + "/level")));
      if (g == "dyadic") return dyadic_lengths(static_cast<int>(as_double(require(inf, "levels", p), p + "/levels")));
      if (g == "explicit") {
        const Json& iv = require(inf, "intervals", p);
        if (!iv.is_array()) fail(p + "/intervals", "expected an array of [r, s] pairs");
        std::vector<OpenInterval> list;
        for (std::size_t k = 0; k < iv.size(); ++k) {
          auto rs = as_doubles(iv[k], p + "/intervals/" + std::to_string(k));
          if (rs.size() != 2) fail(p + "/intervals/" + std::to_string(k), "expected [r, s]");
          list.push_back({rs[0], rs[1]});
        }
        return explicit_intervals(list);
      }
      fail(p + "/generator", "expected one of cantor, dyadic, explicit");
    });
    if (inf.contains("phases")) spec.phases = as_doubles(inf["phases"], p + "/phases");
    if (!spec.phases.empty() && spec.phases.size() != spec.config.intervals.size()) {
      fail(p + "/phases", "need one phase per interval");
    }
    rc.infinite = spec;
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) fail("/params", "expected an object");
    rc.params = doc["params"];
  }
  return rc;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  return parse_run_config(doc);
}

double param_double(const RunConfig& rc, const std::string& key, double fallback) {
  if (!rc.params.contains(key)) return fallback;
  return as_double(rc.params[key], "/params/" + key);
}

int param_int(const RunConfig& rc, const std::string& key, int fallback) {
  if (!rc.params.contains(key)) return fallback;
  const Json& v = rc.params[key];
  if (!v.is_number_integer()) fail("/params/" + key, "expected an integer");
  return v.get<int>();
}

}  // namespace momspec
