#include "momspec/bform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "momspec/parallel.hpp"

namespace momspec {

Complex shannon(const IntervalConfig& cfg, int j, double lambda) {
  if (j < 1 || j > cfg.n() - 1) throw ConfigError("shannon: component must be bounded");
  const double a = cfg.alphas()[j - 1];
  const double b = cfg.betas()[j];
  const double len = b - a;
  const double x = pi * lambda * len;
  const double s = std::abs(x) < 1e-8 ? len : std::sin(x) / (pi * lambda);
  return e(lambda * 0.5 * (a + b)) * s;
}

double shannon_modulus_squared(double length, double lambda) {
  const double x = pi * lambda * length;
  if (std::abs(x) < 1e-8) return length * length;
  const double s = std::sin(x) / (pi * lambda);
  return s * s;
}

namespace {

double min_length(const IntervalConfig& cfg) {
  const auto len = cfg.lengths();
  if (len.empty()) throw ConfigError("inner product: need at least one bounded component");
  return *std::min_element(len.begin(), len.end());
}

// sum_j A_j^B conj(A_j^C) |Sh_j|^2 and the unweighted products.
struct Integrand {
  const IntervalConfig& cfg;
  const BoundaryMatrix& b;
  const BoundaryMatrix& c;
  std::vector<double> len;

  CVector products(double lambda) const {
    CVector ab = coefficients(cfg, b, lambda);
    CVector ac = coefficients(cfg, c, lambda);
    CVector out(len.size());
    for (std::size_t j = 0; j < len.size(); ++j) out(j) = ab(j + 1) * std::conj(ac(j + 1));
    return out;
  }
  Complex operator()(double lambda) const {
    CVector p = products(lambda);
    Complex s = 0.0;
    for (std::size_t j = 0; j < len.size(); ++j) s += p(j) * shannon_modulus_squared(len[j], lambda);
    return s;
  }
};

}  // namespace

InnerProductResult inner_product(const IntervalConfig& cfg, const BoundaryMatrix& b, const BoundaryMatrix& c,
                                 const InnerProductOptions& opts) {
  if (b.dim() != cfg.n() || c.dim() != cfg.n()) throw ConfigError("inner product: dimension mismatch");
  if (is_degenerate(b).degenerate || is_degenerate(c).degenerate) {
    throw ConfigError("inner product: boundary matrices must be non-degenerate");
  }
  const double lmin = min_length(cfg);
  Integrand f{cfg, b, c, cfg.lengths()};
  InnerProductResult r;
  r.lambda_max = opts.lambda_max > 0 ? opts.lambda_max : 200.0 / lmin;
  const double panel = 0.25 / std::max(cfg.total_length(), lmin);
  const auto panels = static_cast<std::size_t>(std::ceil(2.0 * r.lambda_max / panel));
  const double width = 2.0 * r.lambda_max / static_cast<double>(panels);
  std::vector<Complex> vals(panels);
  std::vector<double> errs(panels);
  parallel_for(panels, [&](std::size_t k) {
    const double a = -r.lambda_max + static_cast<double>(k) * width;
    double err = 0.0;
    vals[k] = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, a + width, 8, opts.tolerance, &err);
    errs[k] = err;
  });
  Complex total = 0.0;
  double qerr = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    total += vals[k];
    qerr += errs[k];
  }
  // Beyond +-lambda_max, |Sh_j|^2 averages to 1 / (2 pi^2 lambda^2); the
  // coefficient products are replaced by their mean over a trailing window.
  const double window = 20.0 / lmin;
  const int samples = 4000;
  Complex mean = 0.0;
  double sup = 0.0;
  for (int side = -1; side <= 1; side += 2) {
    for (int s = 0; s < samples; ++s) {
      const double lam = side * (r.lambda_max - window * (s + 0.5) / samples);
      CVector p = f.products(lam);
      mean += p.sum();
      sup = std::max(sup, p.cwiseAbs().sum());
    }
  }
  mean /= static_cast<double>(samples);
  const double tail_scale = 1.0 / (2.0 * pi * pi * r.lambda_max);
  r.tail_correction = mean * tail_scale;
  if (opts.tail_correction) {
    r.value = total + r.tail_correction;
    r.error_bound = qerr + std::abs(r.tail_correction) + 1e-12;
  } else {
    r.value = total;
    r.error_bound = qerr + 2.0 * sup * tail_scale * 2.0;
  }
  return r;
}

Complex inner_product_n2_closed_form(const IntervalConfig& cfg, const BoundaryMatrix& b, const BoundaryMatrix& c) {
  if (cfg.n() != 2 || b.dim() != 2 || c.dim() != 2) throw ConfigError("closed form: requires n = 2");
  const Complex a1 = b(0, 0), b1 = b(0, 1), c1 = c(0, 0), d1 = c(0, 1);
  return a1 * std::conj(c1) / (1.0 - b1 * std::conj(d1)) * cfg.lengths()[0];
}

Complex inner_product_n2_periodized(const IntervalConfig& cfg, const BoundaryMatrix& b, const BoundaryMatrix& c,
                                    int nodes) {
  if (cfg.n() != 2) throw ConfigError("periodized form: requires n = 2");
  const double len = cfg.lengths()[0];
  Complex s = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double lam = (k + 0.5) / (nodes * len);
    s += coefficients(cfg, b, lam)(1) * std::conj(coefficients(cfg, c, lam)(1));
  }
  return len * len * s / (nodes * len);
}

Complex geometric_series_integral(Complex b, Complex d, double length, int nodes) {
  Complex s = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double lam = (k + 0.5) / (nodes * length);
    s += 1.0 / ((1.0 - b * e(lam * length)) * (1.0 - std::conj(d) * e(-lam * length)));
  }
  return s / (nodes * length);
}

double poisson_kernel(Complex b, double xi) {
  const double r = std::abs(b);
  if (r >= 1.0) throw ConfigError("poisson: requires |b| < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(2.0 * pi * xi) + r * r);
}

PerShannonResult per_shannon(double length, double lambda, long truncation) {
  if (truncation < 1) throw ConfigError("per_shannon: truncation must be at least 1");
  PerShannonResult r;
  for (long m = -truncation; m <= truncation; ++m) {
    r.value += shannon_modulus_squared(length, lambda + static_cast<double>(m) / length);
  }
  const double a = std::abs(lambda * length);
  const double room = static_cast<double>(truncation) - a;
  r.tail_bound = room > 1.0 ? 2.0 * length * length / (pi * pi * room)
                            : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace momspec
