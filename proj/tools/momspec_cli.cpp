#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momspec/bform.hpp"
#include "momspec/config.hpp"
#include "momspec/infinite.hpp"
#include "momspec/pointspec.hpp"
#include "momspec/transform.hpp"
#include "momspec/verify.hpp"

using namespace momspec;

namespace {

struct Options {
  std::string config;
  bool verify = false;
  std::uint64_t seed = 1;
  int trials = 500;
  std::string out;
  std::optional<double> lo, hi;
  int points = 1001;
  double half_width = 100.0;
  double center = 0.0;
  std::string times = "0,1,2";
  std::optional<double> horizon;
  int spp = 16;
  double margin = 4.0;
  int stride = 8;
};

class Verifier {
 public:
  void check(const std::string& name, bool ok, double worst, double tol, const std::string& detail = "") {
    std::cerr << "verify " << name << ": " << (ok ? "PASS" : "FAIL") << std::setprecision(6) << " worst=" << worst
              << " tol=" << tol;
    if (!detail.empty()) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    if (!ok) ++failures_;
  }
  void suite(const SuiteResult& s) {
    std::ostringstream d;
    d << s.trials << " trials, " << s.failures << " failures";
    if (s.skipped > 0) d << ", " << s.skipped << " ill-conditioned skipped";
    if (!s.first_failure.empty()) d << ", first: " << s.first_failure;
    check(s.name, s.failures == 0, s.worst, s.tolerance, d.str());
  }
  int exit_code() const { return failures_ == 0 ? 0 : 1; }

 private:
  int failures_ = 0;
};

void report(const Warnings& ws) {
  for (const auto& w : ws) std::cerr << "warning " << w.code << ": " << w.message << "\n";
}

// CSV sink: stdout unless --out is given.
class Csv {
 public:
  explicit Csv(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot write " + path);
    }
    os().precision(17);
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }
  void row(const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os() << (i ? "," : "") << v[i];
    os() << "\n";
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

const IntervalConfig& need_intervals(const RunConfig& rc) {
  if (!rc.intervals) throw ConfigError("config: /intervals: missing field");
  return *rc.intervals;
}

const BoundaryMatrix& need_boundary(const RunConfig& rc, bool second = false) {
  const auto& b = second ? rc.boundary2 : rc.boundary;
  if (!b) throw ConfigError(std::string("config: /") + (second ? "boundary2" : "boundary") + ": missing field");
  if (b->dim() != need_intervals(rc).n()) throw ConfigError("config: /boundary: dimension differs from n");
  return *b;
}

std::vector<double> parse_times(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("--times: cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("--times: empty list");
  return out;
}

double window_lo(const Options& o, const RunConfig& rc, double fallback) {
  return o.lo ? *o.lo : param_double(rc, "lo", fallback);
}
double window_hi(const Options& o, const RunConfig& rc, double fallback) {
  return o.hi ? *o.hi : param_double(rc, "hi", fallback);
}

Grid cli_grid(const Options& o, const IntervalConfig& cfg, const std::vector<const BoundaryMatrix*>& bs, double horizon) {
  GridOptions g;
  g.horizon = horizon;
  g.margin = o.margin;
  g.samples_per_span = o.spp;
  for (const auto* b : bs) g.padding = std::max(g.padding, resonance_padding(cfg, *b));
  return make_grid(cfg, g);
}

GridState initial_state(const RunConfig& rc, const Grid& g) {
  const IntervalConfig& cfg = *rc.intervals;
  GaussianBump bump;
  bump.center = param_double(rc, "center", cfg.betas().front() - 1.0);
  bump.width = param_double(rc, "width", 0.2);
  bump.momentum = param_double(rc, "momentum", 0.0);
  bump.component = param_int(rc, "component", -1);
  return sample_bumps(cfg, g, {bump});
}

// A_1, A_2 for [[a, b], [-conj b, conj a]] by substitution.
std::pair<Complex, Complex> n2_closed_form(const IntervalConfig& cfg, const BoundaryMatrix& b, double lam) {
  const auto& be = cfg.betas();
  const auto& al = cfg.alphas();
  const Complex a = b(0, 0), bb = b(0, 1);
  const Complex a1 = a * e(lam * (be[0] - al[0])) / (1.0 - bb * e(lam * (be[1] - al[0])));
  const Complex a2 = -std::conj(bb) * e(lam * (be[0] - al[1])) + std::conj(a) * e(lam * (be[1] - al[1])) * a1;
  return {a1, a2};
}

int cmd_coeffs(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b = need_boundary(rc);
  const int n = cfg.n();
  const double lo = window_lo(o, rc, -5.0), hi = window_hi(o, rc, 5.0);
  if (o.points < 2) throw ConfigError("--points must be at least 2");
  Csv csv(o.out);
  csv.os() << "lambda,branch";
  for (int j = 0; j <= n; ++j) csv.os() << ",re_A" << j << ",im_A" << j;
  csv.os() << ",boundary_residual\n";
  Verifier v;
  double worst_res = 0.0, worst_closed = 0.0;
  const bool su2 = n == 2 && std::abs(b(1, 1) - std::conj(b(0, 0))) < 1e-12 &&
                   std::abs(b(1, 0) + std::conj(b(0, 1))) < 1e-12 && std::abs(b(0, 1)) < 1.0;
  Warnings warnings;
  for (int k = 0; k < o.points; ++k) {
    const double lam = lo + (hi - lo) * k / (o.points - 1);
    SolveResult r = solve_coefficients(cfg, b, lam);
    for (const auto& w : r.warnings) warnings.push_back(w);
    for (const auto& s : r.solutions) {
      const double res = boundary_residual(cfg, b, s);
      worst_res = std::max(worst_res, res);
      csv.os() << lam << "," << branch_name(s.branch);
      for (int j = 0; j <= n; ++j) csv.os() << "," << s.a(j).real() << "," << s.a(j).imag();
      csv.os() << "," << res << "\n";
    }
    if (o.verify && su2) {
      auto [a1, a2] = n2_closed_form(cfg, b, lam);
      const CVector& a = r.solutions.front().a;
      worst_closed = std::max({worst_closed, std::abs(a(1) - a1), std::abs(a(2) - a2)});
    }
  }
  std::sort(warnings.begin(), warnings.end(), [](const Warning& x, const Warning& y) { return x.code < y.code; });
  warnings.erase(std::unique(warnings.begin(), warnings.end(),
                             [](const Warning& x, const Warning& y) { return x.code == y.code; }),
                 warnings.end());
  report(warnings);
  if (!o.verify) return 0;
  v.check("boundary-residual", worst_res <= 1e-10, worst_res, 1e-10);
  if (su2) v.check("n2-closed-form", worst_closed <= 1e-12, worst_closed, 1e-12);
  for (const auto& s : run_property_suites(o.trials, o.seed)) v.suite(s);
  return v.exit_code();
}

int cmd_pointspec(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b = need_boundary(rc);
  const double lo = window_lo(o, rc, -10.0), hi = window_hi(o, rc, 10.0);
  PointSpectrum ps = find_point_spectrum(cfg, b, lo, hi);
  report(ps.warnings);
  Csv csv(o.out);
  csv.os() << "lambda,multiplicity,sigma_min\n";
  for (const auto& p : ps.points) csv.row({p.lambda, static_cast<double>(p.multiplicity), p.sigma_min});
  if (!o.verify) return 0;
  Verifier v;
  double worst_det = 0.0;
  for (const auto& p : ps.points) worst_det = std::max(worst_det, std::abs(det_D(cfg, b, p.lambda)));
  v.check("roots-are-zeros", worst_det <= 1e-8, worst_det, 1e-8, "|D(lambda)| at every reported point");
  if (auto cf = closed_form_spectrum(cfg, b, lo, hi)) {
    bool same = cf->points.size() == ps.points.size();
    double worst = 0.0;
    for (std::size_t k = 0; same && k < ps.points.size(); ++k) {
      worst = std::max(worst, std::abs(ps.points[k].lambda - cf->points[k].lambda));
      same = ps.points[k].multiplicity == cf->points[k].multiplicity;
    }
    if (!same) worst = std::numeric_limits<double>::infinity();
    v.check("closed-form-match", same && worst <= 1e-8, worst, 1e-8, "points and multiplicities");
  }
  return v.exit_code();
}

int cmd_density(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b = need_boundary(rc);
  const double t = o.half_width;
  if (!(t > 0)) throw ConfigError("--half-width must be positive");
  PointSpectrum ps = find_point_spectrum(cfg, b, o.center - t, o.center + t);
  report(ps.warnings);
  const double d = density(ps, o.center, t);
  Csv csv(o.out);
  csv.os() << "center,half_width,count,density\n";
  csv.row({o.center, t, d * 2.0 * t, d});
  if (!o.verify) return 0;
  Verifier v;
  if (auto cf = closed_form_spectrum(cfg, b, o.center - t, o.center + t)) {
    double expected = 0.0;
    for (const auto& g : *cf->closed_form) expected += 1.0 / g.step;
    const double rel = std::abs(d - expected) / expected;
    v.check("density-matches-lengths", rel <= 0.02, rel, 0.02, "relative to the sum of resonant lengths");
  } else {
    v.check("density-at-most-total-length", d <= cfg.total_length() * 1.02, d, cfg.total_length());
  }
  return v.exit_code();
}

int cmd_poles(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b = need_boundary(rc);
  const double scale = std::max(cfg.total_length(), 1e-3);
  std::vector<Rect> rects;
  for (int k = 0; k < 10; ++k) {
    const double re_lo = (-5.0 + k + 0.5) / scale;
    rects.push_back({re_lo, re_lo + (k % 3 + 1) / scale, -0.5 - 0.1 * k, 0.5});
  }
  Csv csv(o.out);
  csv.os() << "re_lo,re_hi,im_lo,im_hi,count,winding,min_boundary_modulus\n";
  Verifier v;
  double worst_int = 0.0;
  int mismatches = 0;
  for (const auto& r : rects) {
    ZeroCount zc = complex_zero_count(cfg, b, r);
    csv.row({r.re_lo, r.re_hi, r.im_lo, r.im_hi, static_cast<double>(zc.count), zc.winding, zc.min_boundary_modulus});
    worst_int = std::max(worst_int, std::abs(zc.winding - std::round(zc.winding)));
    if (cfg.n() == 2 && zc.count != n2_pole_count(b(0, 1), cfg.lengths()[0], r)) ++mismatches;
  }
  if (!o.verify) return 0;
  v.check("integer-winding", worst_int <= 0.01, worst_int, 0.01);
  if (cfg.n() == 2) v.check("pole-progression", mismatches == 0, mismatches, 0, "contour count vs 1 - b e(zL) zeros");
  return v.exit_code();
}

int cmd_evolve(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b = need_boundary(rc);
  const auto times = parse_times(o.times);
  double tmax = 0.0;
  for (double t : times) tmax = std::max(tmax, std::abs(t));
  const Grid g = cli_grid(o, cfg, {&b}, o.horizon ? *o.horizon : tmax + 1.0);
  SpectralTransform tr(cfg, b, g);
  report(tr.warnings());
  const GridState f = initial_state(rc, g);
  Csv csv(o.out);
  csv.os() << "t,norm";
  for (int j = 0; j <= cfg.n(); ++j) csv.os() << ",mass_J" << j;
  csv.os() << "\n";
  double worst_norm = 0.0, worst_interior = 0.0;
  const bool split = operator_split_form(b);
  auto interior = [&](const GridState& s) {
    double m = 0.0;
    for (int j = 1; j < cfg.n(); ++j) m += s.component_mass(j);
    return m;
  };
  for (double t : times) {
    GridState u = tr.evolve(f, t);
    std::vector<double> row{t, u.norm()};
    for (double m : u.component_masses()) row.push_back(m);
    csv.row(row);
    worst_norm = std::max(worst_norm, std::abs(u.norm() / f.norm() - 1.0));
    worst_interior = std::max(worst_interior, std::abs(interior(u) - interior(f)) / (f.norm() * f.norm()));
  }
  if (!o.verify) return 0;
  Verifier v;
  v.check("norm-conservation", worst_norm <= 1e-3, worst_norm, 1e-3);
  if (split) v.check("interior-mass-conserved", worst_interior <= 1e-3, worst_interior, 1e-3, "split boundary condition");
  if (tmax > 0) {
    GridState lhs = tr.evolve(tr.evolve(f, 0.5 * tmax), 0.5 * tmax);
    GridState rhs = tr.evolve(f, tmax);
    const double r = (lhs - rhs).norm() / f.norm();
    v.check("group-law", r <= 1e-3, r, 1e-3, "U(t/2) U(t/2) = U(t)");
  }
  return v.exit_code();
}

int cmd_intertwine(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b1 = need_boundary(rc);
  const BoundaryMatrix& b2 = need_boundary(rc, true);
  const double horizon = o.horizon ? *o.horizon : 2.0;
  const Grid g = cli_grid(o, cfg, {&b1, &b2}, horizon);
  SpectralTransform t1(cfg, b1, g), t2(cfg, b2, g);
  report(t1.warnings());
  report(t2.warnings());
  const GridState f = initial_state(rc, g);
  const GridState w = intertwiner_apply(t1, t2, f);
  Csv csv(o.out);
  csv.os() << "x,component,re_f,im_f,re_Wf,im_Wf\n";
  if (o.stride < 1) throw ConfigError("--stride must be positive");
  for (std::size_t m = 0; m < g.size; m += static_cast<std::size_t>(o.stride)) {
    if (f.component_of(m) < 0) continue;
    csv.row({g.x(m), static_cast<double>(f.component_of(m)), f[m].real(), f[m].imag(), w[m].real(), w[m].imag()});
  }
  if (!o.verify) return 0;
  Verifier v;
  const double iso = std::abs(w.norm() / f.norm() - 1.0);
  v.check("isometry", iso <= 1e-3, iso, 1e-3);
  const double t = horizon / 2.0;
  const GridState lhs = intertwiner_apply(t1, t2, t1.evolve(f, t));
  const GridState rhs = t2.evolve(w, t);
  const double inter = (lhs - rhs).norm() / f.norm();
  v.check("intertwining", inter <= 1e-3, inter, 1e-3, "W U1(t) = U2(t) W");
  GaussianBump in_bump;
  in_bump.center = cfg.betas().front() - 1.0;
  in_bump.width = 0.2;
  in_bump.component = 0;
  const GridState incoming = sample_bumps(cfg, g, {in_bump});
  const double fix = (intertwiner_apply(t1, t2, incoming) - incoming).norm() / incoming.norm();
  v.check("incoming-fixed", fix <= 1e-3, fix, 1e-3, "left half-line states");
  return v.exit_code();
}

int cmd_inner(const Options& o, const RunConfig& rc) {
  const IntervalConfig& cfg = need_intervals(rc);
  const BoundaryMatrix& b = need_boundary(rc);
  const BoundaryMatrix& c = rc.boundary2 ? need_boundary(rc, true) : b;
  InnerProductResult r = inner_product(cfg, b, c);
  Csv csv(o.out);
  csv.os() << "re,im,error_bound,lambda_max";
  const bool n2 = cfg.n() == 2;
  Complex closed = 0.0;
  if (n2) {
    closed = inner_product_n2_closed_form(cfg, b, c);
    csv.os() << ",re_closed,im_closed";
  }
  csv.os() << "\n";
  std::vector<double> row{r.value.real(), r.value.imag(), r.error_bound, r.lambda_max};
  if (n2) {
    row.push_back(closed.real());
    row.push_back(closed.imag());
  }
  csv.row(row);
  if (!o.verify) return 0;
  Verifier v;
  if (n2) {
    const double rel = std::abs(r.value - closed) / std::abs(closed);
    v.check("closed-form", rel <= 1e-3, rel, 1e-3);
    const double per = std::abs(inner_product_n2_periodized(cfg, b, c) - closed) / std::abs(closed);
    v.check("periodized-form", per <= 1e-10, per, 1e-10);
    const double len = cfg.lengths()[0];
    const double self = std::abs(inner_product(cfg, b, b).value - Complex(len)) / len;
    v.check("norm-is-length", self <= 1e-3, self, 1e-3);
  }
  const Complex swapped = inner_product(cfg, c, b).value;
  const double herm = std::abs(r.value - std::conj(swapped));
  v.check("hermitian", herm <= 1e-9, herm, 1e-9);
  return v.exit_code();
}

int cmd_decompose(const Options& o, const RunConfig& rc) {
  const BoundaryMatrix& b = need_boundary(rc);
  DecompositionReport d = decompose(b);
  SplitFormReport s = operator_split_form_report(b);
  Csv csv(o.out);
  csv.os() << "block,index\n";
  for (std::size_t k = 0; k < d.blocks.size(); ++k)
    for (int i : d.blocks[k]) csv.os() << k + 1 << "," << i + 1 << "\n";
  std::cerr << "decomposable=" << (d.is_decomposable ? "true" : "false")
            << " operator_split=" << (s.split ? "true" : "false") << "\n";
  if (!o.verify) return 0;
  Verifier v;
  const int n = b.dim();
  CMatrix p = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) p(k, d.permutation[k]) = 1.0;
  DecompositionReport again = decompose(BoundaryMatrix(p * b.matrix() * p.transpose()));
  bool same = again.blocks.size() == d.blocks.size();
  for (std::size_t k = 0; same && k < d.blocks.size(); ++k) same = again.blocks[k].size() == d.blocks[k].size();
  v.check("idempotent", same, same ? 0.0 : 1.0, 0.0, "re-decomposing the block form keeps the partition");
  v.check("split-form-consistent", s.consistent, s.consistent ? 0.0 : 1.0, 0.0, "u = 0, w = 0 and unitary B'");
  if (rc.intervals && s.split) {
    Options eo = o;
    eo.verify = true;
    eo.out = "/dev/null";
    eo.times = "0.5,1,2";
    std::cerr << "evolving to check the split:\n";
    if (cmd_evolve(eo, rc) != 0) v.check("split-evolution", false, 1.0, 0.0);
  }
  return v.exit_code();
}

int cmd_cantor(const Options& o, const RunConfig& rc) {
  if (!rc.infinite) throw ConfigError("config: /infinite: missing field");
  const InfiniteSpec& spec = *rc.infinite;
  const double lo = window_lo(o, rc, -30.0), hi = window_hi(o, rc, 30.0);
  InfiniteSpectrum s = diagonal_point_spectrum(spec.config, spec.phases, lo, hi);
  std::cerr << "note: " << s.truncation_note << "\n";
  Csv csv(o.out);
  csv.os() << "lambda,multiplicity\n";
  for (const auto& p : s.spectrum.points) csv.row({p.lambda, static_cast<double>(p.multiplicity)});
  if (!o.verify) return 0;
  Verifier v;
  const InfiniteConfig& cfg = spec.config;
  if (cfg.label == "middle-thirds-cantor" && spec.phases.empty()) {
    int bad = 0;
    std::map<long, int> got;
    for (const auto& p : s.spectrum.points) got[std::lround(p.lambda)] = p.multiplicity;
    for (long m = static_cast<long>(std::ceil(lo)); m <= static_cast<long>(std::floor(hi)); ++m) {
      if (m % 3 != 0) {
        bad += got.count(m) ? 1 : 0;
        continue;
      }
      int expect = 0;
      long step = 3;
      for (int j = 0; j <= cfg.level; ++j, step *= 3)
        if (m % step == 0) expect += 1 << j;
      if (!got.count(m) || got[m] != expect) ++bad;
    }
    v.check("cantor-multiplicity-law", bad == 0 && got.size() == s.spectrum.points.size(), bad, 0,
            "3Z with 2^k - 1 on 3^k Z minus 3^(k+1) Z");
  } else if (cfg.label == "dyadic" && spec.phases.empty()) {
    int bad = 0;
    for (const auto& p : s.spectrum.points) {
      long m = std::lround(p.lambda);
      if (m == 0) {
        bad += p.multiplicity == static_cast<int>(cfg.intervals.size()) ? 0 : 1;
        continue;
      }
      int k = 0;
      while (m % 2 == 0 && k < static_cast<int>(cfg.intervals.size())) {
        m /= 2;
        ++k;
      }
      bad += p.multiplicity == k ? 0 : 1;
    }
    v.check("dyadic-multiplicity-law", bad == 0, bad, 0, "multiplicity k on 2^k Z_odd");
  }
  double worst = 0.0;
  for (const auto& p : s.spectrum.points) {
    int count = 0;
    for (std::size_t k = 0; k < cfg.intervals.size(); ++k) {
      const double th = spec.phases.empty() ? 0.0 : spec.phases[k];
      const double x = p.lambda * cfg.intervals[k].length() - th;
      if (std::abs(x - std::round(x)) <= 1e-9) ++count;
    }
    worst = std::max(worst, std::abs(static_cast<double>(count - p.multiplicity)));
  }
  v.check("membership-count", worst == 0.0, worst, 0.0);
  return v.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral computations for momentum operators on the line with intervals removed"};
  app.require_subcommand(1);
  Options o;
  using Handler = int (*)(const Options&, const RunConfig&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"coeffs", "scattering coefficients A_0..A_n on a lambda grid", cmd_coeffs},
      {"pointspec", "embedded eigenvalues in a window", cmd_pointspec},
      {"density", "counting density of the point spectrum", cmd_density},
      {"poles", "zero counts of D in complex rectangles", cmd_poles},
      {"evolve", "unitary evolution of a Gaussian state", cmd_evolve},
      {"intertwine", "apply W = V_B2* V_B1", cmd_intertwine},
      {"inner", "inner product of two boundary conditions", cmd_inner},
      {"decompose", "block decomposition of the boundary matrix", cmd_decompose},
      {"cantor", "point spectrum of an infinite diagonal configuration", cmd_cantor},
  };
  std::map<std::string, Handler> handlers;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[name] = fn;
    sub->add_option("config", o.config, "JSON configuration")->required();
    sub->add_flag("--verify", o.verify, "run invariant checks, exit 1 on failure");
    sub->add_option("--seed", o.seed, "seed for randomized suites");
    sub->add_option("--trials", o.trials, "trials per randomized suite");
    sub->add_option("--out", o.out, "CSV output path (default stdout)");
    sub->add_option("--lo", o.lo, "window lower end");
    sub->add_option("--hi", o.hi, "window upper end");
    sub->add_option("--points", o.points, "lambda samples for coeffs");
    sub->add_option("--half-width", o.half_width, "density half width T");
    sub->add_option("--center", o.center, "density center");
    sub->add_option("--times", o.times, "comma separated evolution times");
    sub->add_option("--horizon", o.horizon, "grid horizon");
    sub->add_option("--spp", o.spp, "samples per shortest span");
    sub->add_option("--margin", o.margin, "grid margin beyond the horizon");
    sub->add_option("--stride", o.stride, "sample stride for state output");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    const RunConfig rc = load_run_config(o.config);
    for (const auto& [name, fn] : handlers)
      if (app.got_subcommand(name)) return fn(o, rc);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
