#include "momspec/pointspec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "momspec/parallel.hpp"

namespace momspec {

namespace {

Eigen::VectorXd corner_singular_values(const IntervalConfig& cfg, const BoundaryMatrix& b, double lambda) {
  CMatrix m = twisted_corner(cfg, b, lambda);
  CMatrix a = CMatrix::Identity(m.rows(), m.cols()) - m;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues();
}

int kernel_dimension(const Eigen::VectorXd& sv, double tol) {
  int d = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++d;
  return d;
}

double golden_minimize(const std::function<double(double)>& f, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200; ++it) {
    if (std::abs(b - a) <= 4e-16 * std::max(1.0, std::abs(a))) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

double sigma_min_at(const IntervalConfig& cfg, const BoundaryMatrix& b, double lambda) {
  if (b.dim() < 2) return 1.0;
  auto sv = corner_singular_values(cfg, b, lambda);
  return sv(sv.size() - 1);
}

PointSpectrum find_point_spectrum(const IntervalConfig& cfg, const BoundaryMatrix& b, double lo,
                                  double hi, const ScanOptions& opts) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ConfigError("pointspec: window must be finite with lo <= hi");
  }
  PointSpectrum out;
  out.lo = lo;
  out.hi = hi;
  if (b.dim() < 2) return out;
  const double step = opts.step > 0 ? opts.step : 1.0 / (16.0 * std::max(cfg.total_length(), 1.0));
  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  const std::size_t count = cells + 3;  // one extra point beyond each end
  std::vector<double> grid(count), sigma(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + (static_cast<double>(i) - 1.0) * step;
  parallel_for(count, [&](std::size_t i) { sigma[i] = sigma_min_at(cfg, b, grid[i]); });

  std::vector<std::size_t> minima;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (sigma[i] < sigma[i - 1] && sigma[i] <= sigma[i + 1]) minima.push_back(i);
  }

  std::vector<SpectralPoint> found(minima.size(), SpectralPoint{0.0, -1, 0.0});
  parallel_for(minima.size(), [&](std::size_t q) {
    const std::size_t i = minima[q];
    auto f = [&](double x) { return sigma_min_at(cfg, b, x); };
    double x = golden_minimize(f, grid[i - 1], grid[i + 1]);
    double s = f(x);
    if (s > opts.candidate_threshold) return;
    for (int it = 0; it < 30; ++it) {
      Complex d = det_D(cfg, b, x);
      Complex dd = det_D_derivative(cfg, b, x).dD;
      if (std::abs(dd) < 1e-300) break;
      const double delta = (d / dd).real();
      if (!std::isfinite(delta) || std::abs(delta) <= 1e-16 * std::max(1.0, std::abs(x))) break;
      double next = x - delta;
      double sn = f(next);
      if (!(sn < s)) break;
      x = next;
      s = sn;
    }
    if (s > opts.root_threshold) return;
    if (x < lo - 1e-12 || x > hi + 1e-12) return;
    auto sv = corner_singular_values(cfg, b, x);
    found[q] = SpectralPoint{x, std::max(1, kernel_dimension(sv, opts.root_threshold)), s};
  });

  std::vector<SpectralPoint> pts;
  for (const auto& p : found)
    if (p.multiplicity > 0) pts.push_back(p);
  std::sort(pts.begin(), pts.end(),
            [](const SpectralPoint& a, const SpectralPoint& c) { return a.lambda < c.lambda; });
  for (const auto& p : pts) {
    if (!out.points.empty() && std::abs(p.lambda - out.points.back().lambda) <= 1e-9 * std::max(1.0, std::abs(p.lambda))) {
      if (std::abs(p.lambda - out.points.back().lambda) <= opts.collision_tolerance) {
        std::ostringstream os;
        os << "refined roots collide near " << p.lambda << "; multiplicity taken from kernel dimension";
        out.warnings.push_back({"root-collision", os.str()});
      }
      if (p.sigma_min < out.points.back().sigma_min) out.points.back() = p;
      continue;
    }
    out.points.push_back(p);
  }
  return out;
}

std::vector<SpectralPoint> enumerate_progressions(const std::vector<Progression>& gens, double lo,
                                                  double hi, double tolerance) {
  std::vector<double> vals;
  for (const auto& g : gens) {
    const long m0 = static_cast<long>(std::ceil((lo - g.offset) / g.step - tolerance));
    const long m1 = static_cast<long>(std::floor((hi - g.offset) / g.step + tolerance));
    for (long m = m0; m <= m1; ++m) vals.push_back(g.offset + static_cast<double>(m) * g.step);
  }
  std::sort(vals.begin(), vals.end());
  std::vector<SpectralPoint> pts;
  for (double v : vals) {
    if (!pts.empty() && std::abs(v - pts.back().lambda) <= tolerance * std::max(1.0, std::abs(v))) {
      ++pts.back().multiplicity;
      continue;
    }
    pts.push_back({v, 1, 0.0});
  }
  return pts;
}

std::optional<PointSpectrum> closed_form_spectrum(const IntervalConfig& cfg, const BoundaryMatrix& b,
                                                  double lo, double hi) {
  if (b.dim() < 2) return std::nullopt;
  CMatrix corner = b.corner().corner;
  CMatrix off = corner;
  off.diagonal().setZero();
  if (off.norm() > 1e-12) return std::nullopt;
  const auto len = cfg.lengths();
  std::vector<Progression> gens;
  for (std::size_t k = 0; k < len.size(); ++k) {
    Complex z = corner(k, k);
    if (std::abs(std::abs(z) - 1.0) > 1e-10) continue;
    const double theta = std::arg(z) / (2.0 * pi);
    gens.push_back({-theta / len[k], 1.0 / len[k], static_cast<int>(k) + 1});
  }
  PointSpectrum out;
  out.lo = lo;
  out.hi = hi;
  out.points = enumerate_progressions(gens, lo, hi);
  out.closed_form = gens;
  return out;
}

double density(const PointSpectrum& s, double center, double half_width) {
  if (half_width <= 0) throw ConfigError("density: half-width must be positive");
  const double a = center - half_width, c = center + half_width;
  const double slack = 1e-9 * std::max(1.0, std::abs(c));
  if (a < s.lo - slack || c > s.hi + slack) {
    throw ConfigError("density: window exceeds computed range");
  }
  long total = 0;
  for (const auto& p : s.points)
    if (p.lambda >= a - slack && p.lambda < c - slack) total += p.multiplicity;
  return static_cast<double>(total) / (2.0 * half_width);
}

ZeroCount complex_zero_count(const IntervalConfig& cfg, const BoundaryMatrix& b, const Rect& r) {
  if (!(r.re_lo < r.re_hi && r.im_lo < r.im_hi)) throw ConfigError("poles: degenerate rectangle");
  const Complex corners[5] = {{r.re_lo, r.im_lo}, {r.re_hi, r.im_lo}, {r.re_hi, r.im_hi},
                              {r.re_lo, r.im_hi}, {r.re_lo, r.im_lo}};
  ZeroCount out;
  out.min_boundary_modulus = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 4; ++s) {
    for (int k = 0; k <= 512; ++k) {
      Complex z = corners[s] + (corners[s + 1] - corners[s]) * (k / 512.0);
      out.min_boundary_modulus = std::min(out.min_boundary_modulus, std::abs(det_D(cfg, b, z)));
    }
  }
  if (out.min_boundary_modulus <= 1e-8) {
    throw NumericalError("boundary-zero", "poles: D vanishes on the rectangle boundary");
  }
  const double scale = std::max(cfg.total_length(), 1.0);
  auto integrate = [&](int panels_per_unit) {
    Complex total = 0.0;
    for (int s = 0; s < 4; ++s) {
      const Complex z0 = corners[s], dz = corners[s + 1] - corners[s];
      auto f = [&](double t) {
        Complex z = z0 + t * dz;
        return det_D_derivative(cfg, b, z).dD / det_D(cfg, b, z) * dz;
      };
      const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(dz) * scale * panels_per_unit)));
      for (int k = 0; k < panels; ++k) {
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            f, static_cast<double>(k) / panels, static_cast<double>(k + 1) / panels, 0);
      }
    }
    return total / (2.0 * pi * I_unit);
  };
  auto off_integer = [](Complex w) { return std::max(std::abs(w.real() - std::round(w.real())), std::abs(w.imag())); };
  Complex w = integrate(8);
  for (int per = 16; off_integer(w) > 0.01 && per <= 1024; per *= 2) w = integrate(per);
  if (off_integer(w) > 0.1) {
    throw NumericalError("non-integer-winding", "poles: winding number is not close to an integer");
  }
  out.winding = w.real();
  out.count = static_cast<int>(std::lround(w.real()));
  return out;
}

int n2_pole_count(Complex b, double length, const Rect& r) {
  if (std::abs(b) == 0.0) return 0;
  const double im = std::log(std::abs(b)) / (2.0 * pi) / length;
  if (im < r.im_lo || im > r.im_hi) return 0;
  const double shift = -std::arg(b) / (2.0 * pi);
  const long k0 = static_cast<long>(std::ceil(r.re_lo * length - shift));
  const long k1 = static_cast<long>(std::floor(r.re_hi * length - shift));
  return static_cast<int>(std::max(0L, k1 - k0 + 1));
}

double torus_motion_residual(const IntervalConfig& cfg, Complex a, double lambda) {
  if (cfg.n() != 3) throw ConfigError("torus: requires n = 3");
  const double w = std::abs(a);
  if (!(w > 0.0 && w < 1.0)) throw ConfigError("torus: need 0 < |a| < 1");
  const double phi0 = std::arg(a) / (2.0 * pi);
  const auto len = cfg.lengths();
  const Complex ee = e(lambda * len[0] + phi0);
  const Complex denom = w - ee;
  if (std::abs(denom) < 1e-12) throw NumericalError("mobius-pole", "torus: denominator vanishes");
  return std::abs(e(lambda * len[1] - phi0) - (1.0 - w * ee) / denom);
}

SpectralPairCheck spectral_pair_check(const IntervalConfig& cfg, const BoundaryMatrix& b, double lambda) {
  if (cfg.n() != 3) throw ConfigError("spectral pair: requires n = 3");
  CMatrix m = twisted_corner(cfg, b, lambda);
  Eigen::JacobiSVD<CMatrix> svd(CMatrix::Identity(2, 2) - m, Eigen::ComputeFullV);
  CVector zeta = svd.matrixV().col(1);
  SpectralPairCheck r;
  r.modulus_residual = std::abs(std::abs(zeta(0)) - std::abs(zeta(1)));
  r.equal = std::abs(zeta(0) - zeta(1)) <= 1e-8;
  return r;
}

std::vector<double> fold_points(const std::vector<SpectralPoint>& pts, double period, double tol) {
  std::vector<double> v;
  for (const auto& p : pts) {
    double r = std::fmod(p.lambda, period);
    if (r < 0) r += period;
    if (r >= period - tol) r = 0.0;
    v.push_back(r);
  }
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

double max_circular_gap(const std::vector<double>& folded, double period) {
  if (folded.empty()) return period;
  double g = folded.front() + period - folded.back();
  for (std::size_t i = 1; i < folded.size(); ++i) g = std::max(g, folded[i] - folded[i - 1]);
  return g;
}

}  // namespace momspec
