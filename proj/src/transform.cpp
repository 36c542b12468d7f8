#include "momspec/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include <fftw3.h>

#include "momspec/bform.hpp"
#include "momspec/parallel.hpp"

namespace momspec {

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place transform: sign -1 computes sum_m x_m e^{-2 pi i k m / N}.
void fft_in_place(std::vector<Complex>& data, int sign) {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

bool on_edge(double p, double x_min, double dx) {
  const double q = (p - x_min) / dx;
  return std::abs(q - std::round(q)) <= 1e-7;
}

std::vector<double> endpoints(const IntervalConfig& cfg) {
  std::vector<double> v = cfg.betas();
  v.insert(v.end(), cfg.alphas().begin(), cfg.alphas().end());
  return v;
}

}  // namespace

long Grid::frequency_index(std::size_t i) const {
  const auto n = static_cast<long>(spectral_size);
  const auto k = static_cast<long>(i);
  return k < (n + 1) / 2 ? k : k - n;
}

Grid make_grid(const IntervalConfig& cfg, const GridOptions& opts) {
  if (opts.horizon < 0 || opts.margin < 0) throw ConfigError("grid: horizon and margin must be non-negative");
  const auto lg = cfg.lengths_and_gaps();
  double h = std::numeric_limits<double>::infinity();
  for (double v : lg.lengths) h = std::min(h, v);
  for (double v : lg.gaps) h = std::min(h, v);
  const auto ends = endpoints(cfg);
  const double b1 = cfg.betas().front();
  Grid g;
  if (opts.dx) {
    if (!(*opts.dx > 0)) throw ConfigError("grid: dx must be positive");
    g.dx = *opts.dx;
  } else {
    g.dx = h / opts.samples_per_span;
    for (int m = opts.samples_per_span; m <= 64 * opts.samples_per_span; ++m) {
      const double dx = h / m;
      if (std::all_of(ends.begin(), ends.end(), [&](double p) { return on_edge(p, b1, dx); })) {
        g.dx = dx;
        break;
      }
    }
  }
  const double reach = opts.horizon + opts.margin;
  if (opts.padding < 0) throw ConfigError("grid: padding must be non-negative");
  const double cells_left = std::ceil((reach + opts.padding) / g.dx - 1e-9);
  g.x_min = b1 - cells_left * g.dx;
  const double right = cfg.alphas().back() + reach;
  auto size = static_cast<std::size_t>(std::ceil((right - g.x_min) / g.dx - 1e-9));
  g.size = size;
  std::size_t removed = 0;
  for (std::size_t m = 0; m < size; ++m)
    if (cfg.classify(g.x(m)).removed) ++removed;
  std::size_t spectral = std::max<std::size_t>(size - removed, 8);
  if (opts.power_of_two) {
    std::size_t p = 1;
    while (p < spectral) p <<= 1;
    spectral = p;
  }
  g.spectral_size = spectral;
  g.size = spectral + removed;
  g.horizon = opts.horizon;
  g.aligned = std::all_of(ends.begin(), ends.end(), [&](double p) { return on_edge(p, g.x_min, g.dx); });
  return g;
}

double resonance_padding(const IntervalConfig& cfg, const BoundaryMatrix& b, double tol, double cap) {
  if (b.dim() < 2) return 0.0;
  Eigen::ComplexEigenSolver<CMatrix> es(b.corner().corner, false);
  double rho = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double m = std::abs(es.eigenvalues()(i));
    if (m < 1.0 - 1e-9) rho = std::max(rho, m);
  }
  const double diameter = cfg.alphas().back() - cfg.betas().front();
  if (rho <= 0.0) return diameter;
  return std::min(cap, std::log(1.0 / tol) / -std::log(rho)) * diameter;
}

GridState::GridState(IntervalConfig cfg, Grid grid)
    : cfg_(std::move(cfg)), grid_(grid), values_(grid.size, Complex(0.0)), component_(grid.size, -1) {
  for (std::size_t m = 0; m < grid_.size; ++m) {
    Location loc = cfg_.classify(grid_.x(m));
    component_[m] = loc.removed ? -1 : loc.component;
  }
}

void GridState::set(std::size_t m, Complex v) {
  if (component_[m] >= 0) values_[m] = v;
}

void GridState::add(std::size_t m, Complex v) {
  if (component_[m] >= 0) values_[m] += v;
}

double GridState::norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s * grid_.dx);
}

double GridState::component_mass(int k) const {
  double s = 0.0;
  for (std::size_t m = 0; m < values_.size(); ++m)
    if (component_[m] == k) s += std::norm(values_[m]);
  return s * grid_.dx;
}

std::vector<double> GridState::component_masses() const {
  std::vector<double> out(cfg_.n() + 1, 0.0);
  for (std::size_t m = 0; m < values_.size(); ++m)
    if (component_[m] >= 0) out[component_[m]] += std::norm(values_[m]);
  for (auto& v : out) v *= grid_.dx;
  return out;
}

Complex GridState::inner(const GridState& other) const {
  Complex s = 0.0;
  for (std::size_t m = 0; m < values_.size(); ++m) s += std::conj(values_[m]) * other.values_[m];
  return s * grid_.dx;
}

GridState GridState::restricted(const std::vector<int>& keep) const {
  GridState out(*this);
  for (std::size_t m = 0; m < values_.size(); ++m) {
    if (std::find(keep.begin(), keep.end(), component_[m]) == keep.end()) out.values_[m] = 0.0;
  }
  return out;
}

GridState GridState::operator-(const GridState& other) const {
  GridState out(*this);
  for (std::size_t m = 0; m < values_.size(); ++m) out.values_[m] -= other.values_[m];
  return out;
}

GridState sample(const IntervalConfig& cfg, const Grid& grid, const std::function<Complex(double)>& f) {
  GridState s(cfg, grid);
  for (std::size_t m = 0; m < grid.size; ++m) s.set(m, f(grid.x(m)));
  return s;
}

Complex GaussianBump::operator()(double x) const {
  const double d = (x - center) / width;
  return amplitude * std::exp(-0.5 * d * d) * e(momentum * x);
}

GridState sample_bumps(const IntervalConfig& cfg, const Grid& grid, const std::vector<GaussianBump>& bumps) {
  GridState s(cfg, grid);
  for (std::size_t m = 0; m < grid.size; ++m) {
    const double x = grid.x(m);
    Complex v = 0.0;
    for (const auto& b : bumps)
      if (b.component < 0 || b.component == s.component_of(m)) v += b(x);
    s.set(m, v);
  }
  return s;
}

bool IntervalSet::contains(double x) const {
  return std::any_of(parts.begin(), parts.end(), [x](const auto& p) { return x >= p.first && x < p.second; });
}

IntervalSet IntervalSet::everything() {
  return IntervalSet{{{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()}}};
}

SpectralTransform::SpectralTransform(IntervalConfig cfg, BoundaryMatrix b, Grid grid)
    : cfg_(std::move(cfg)), b_(std::move(b)), grid_(grid) {
  const int n = cfg_.n();
  if (b_.dim() != n) throw ConfigError("transform: boundary matrix dimension does not match interval count");
  if (!grid_.aligned) {
    warnings_.push_back({"grid-misaligned", "endpoints do not lie on cell edges; transforms are approximate"});
  }
  const double room = cfg_.betas().front() - grid_.x_min - grid_.horizon;
  if (room < 0.999 * resonance_padding(cfg_, b_)) {
    warnings_.push_back({"wrap-around", "left padding is shorter than the resonance decay length; "
                                        "multiply scattered waves may alias across the periodic box"});
  }
  const std::size_t size = grid_.spectral_size;
  shift_.assign(n + 1, 0.0);
  std::vector<char> seen(n + 1, 0);
  for (std::size_t m = 0; m < grid_.size; ++m) {
    const Location loc = cfg_.classify(grid_.x(m));
    if (loc.removed) continue;
    if (!seen[loc.component]) {
      seen[loc.component] = 1;
      shift_[loc.component] = static_cast<double>(m - kept_.size()) * grid_.dx;
    }
    kept_.push_back(m);
  }
  if (kept_.size() != size) throw ConfigError("transform: grid was not built for this configuration");
  coeffs_.assign(static_cast<std::size_t>(n + 1) * size, Complex(0.0));
  std::vector<char> resonant(size, 0);
  parallel_for(size, [&](std::size_t i) {
    SolveResult r = solve_coefficients(cfg_, b_, grid_.lambda(i));
    const ScatteringSolution& s = r.solutions.front();
    if (s.branch != Branch::nondegenerate) resonant[i] = 1;
    if (!s.particular) return;
    for (int j = 0; j <= n; ++j) coeffs_[static_cast<std::size_t>(j) * size + i] = s.a(j);
  });
  const auto hits = std::count(resonant.begin(), resonant.end(), 1);
  if (hits > 0) {
    std::ostringstream os;
    os << hits << " frequency samples lie within tolerance of the point spectrum";
    warnings_.push_back({"grid-resonance", os.str()});
  }

  if (n < 2) return;
  Eigen::JacobiSVD<CMatrix> corner_svd(b_.corner().corner);
  if (corner_svd.singularValues()(0) < 1.0 - 1e-12) return;  // ||B'|| < 1: no real zeros of D

  const double band_lo = grid_.lambda(size / 2);
  const double period = static_cast<double>(size) * grid_.dlambda();
  const double pad = 1.0 / (16.0 * std::max(cfg_.total_length(), 1.0));
  PointSpectrum ps = find_point_spectrum(cfg_, b_, band_lo - pad, band_lo + period + pad);
  for (const auto& w : ps.warnings) warnings_.push_back(w);
  std::vector<double> lambdas;
  for (const auto& p : ps.points) {
    double lam = p.lambda;
    if (grid_.aligned) {
      lam = band_lo + std::fmod(lam - band_lo, period);
      if (lam < band_lo) lam += period;
      if (lam >= band_lo + period - 1e-9) lam -= period;
    } else if (lam < band_lo || lam >= band_lo + period) {
      continue;
    }
    if (std::none_of(lambdas.begin(), lambdas.end(), [&](double v) { return std::abs(v - lam) <= 1e-9; }))
      lambdas.push_back(lam);
  }
  std::sort(lambdas.begin(), lambdas.end());
  const auto len = cfg_.lengths();
  Eigen::VectorXd sqrt_len(n - 1);
  for (int j = 0; j < n - 1; ++j) sqrt_len(j) = std::sqrt(len[j]);
  for (double lam : lambdas) {
    CMatrix m = twisted_corner(cfg_, b_, lam);
    Eigen::JacobiSVD<CMatrix> svd(CMatrix::Identity(n - 1, n - 1) - m, Eigen::ComputeFullV);
    int q = 0;
    for (Eigen::Index i = 0; i < n - 1; ++i)
      if (svd.singularValues()(i) <= kDegeneracyTolerance) ++q;
    q = std::max(q, 1);
    CMatrix weighted = sqrt_len.asDiagonal() * svd.matrixV().rightCols(q);
    Eigen::HouseholderQR<CMatrix> qr(weighted);
    CMatrix orth = CMatrix(qr.householderQ()).leftCols(q);
    for (int c = 0; c < q; ++c) {
      BoundState bs;
      bs.lambda = lam;
      bs.zeta = sqrt_len.cwiseInverse().asDiagonal() * orth.col(c);
      bound_.push_back(bs);
    }
  }
}

std::vector<std::vector<Complex>> SpectralTransform::component_transforms(const GridState& f) const {
  const int n = cfg_.n();
  const std::size_t size = grid_.spectral_size;
  std::vector<std::vector<Complex>> out(n + 1, std::vector<Complex>(size, 0.0));
  const double x0 = grid_.x(0);
  for (int j = 0; j <= n; ++j) {
    auto& buf = out[j];
    bool any = false;
    for (std::size_t q = 0; q < size; ++q) {
      const std::size_t m = kept_[q];
      if (f.component_of(m) == j) {
        buf[q] = f[m];
        any = any || f[m] != Complex(0.0);
      }
    }
    if (!any) continue;
    fft_in_place(buf, -1);
    for (std::size_t i = 0; i < size; ++i) buf[i] *= grid_.dx * e(-grid_.lambda(i) * (x0 + shift_[j]));
  }
  return out;
}

SpectralFunction SpectralTransform::zero_spectral() const {
  SpectralFunction g;
  g.grid = grid_;
  g.values.assign(grid_.spectral_size, 0.0);
  g.point_values.assign(bound_.size(), 0.0);
  return g;
}

SpectralFunction SpectralTransform::forward(const GridState& f) const {
  if (f.size() != grid_.size) throw ConfigError("transform: state grid does not match");
  const int n = cfg_.n();
  const std::size_t size = grid_.spectral_size;
  SpectralFunction g = zero_spectral();
  auto parts = component_transforms(f);
  for (int j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < size; ++i) g.values[i] += std::conj(coefficient(j, i)) * parts[j][i];
  }
  for (std::size_t q = 0; q < bound_.size(); ++q) {
    const auto& bs = bound_[q];
    Complex s = 0.0;
    for (std::size_t m = 0; m < grid_.size; ++m) {
      const int c = f.component_of(m);
      if (c >= 1 && c <= n - 1) s += std::conj(bs.zeta(c - 1) * e(bs.lambda * grid_.x(m))) * f[m];
    }
    g.point_values[q] = s * grid_.dx;
  }
  return g;
}

GridState SpectralTransform::inverse(const SpectralFunction& g) const {
  const int n = cfg_.n();
  const std::size_t size = grid_.spectral_size;
  GridState out(cfg_, grid_);
  const double x0 = grid_.x(0);
  std::vector<Complex> buf(size);
  for (int j = 0; j <= n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < size; ++i) {
      buf[i] = coefficient(j, i) * g.values[i] * e(grid_.lambda(i) * (x0 + shift_[j]));
      any = any || buf[i] != Complex(0.0);
    }
    if (!any) continue;
    fft_in_place(buf, +1);
    for (std::size_t q = 0; q < size; ++q) {
      const std::size_t m = kept_[q];
      if (out.component_of(m) == j) out.set(m, buf[q] * grid_.dlambda());
    }
  }
  for (std::size_t q = 0; q < bound_.size(); ++q) {
    const auto& bs = bound_[q];
    const Complex c = g.point_values[q];
    if (c == Complex(0.0)) continue;
    for (std::size_t m = 0; m < grid_.size; ++m) {
      const int comp = out.component_of(m);
      if (comp >= 1 && comp <= n - 1) out.add(m, c * bs.zeta(comp - 1) * e(bs.lambda * grid_.x(m)));
    }
  }
  return out;
}

GridState SpectralTransform::evolve(const GridState& f, double t) const {
  if (std::abs(t) > grid_.horizon + 1e-12) {
    std::ostringstream os;
    os << "evolve: |t| = " << std::abs(t) << " exceeds the grid horizon " << grid_.horizon;
    throw NumericalError("horizon", os.str());
  }
  if (t == 0.0) return f;
  SpectralFunction g = forward(f);
  for (std::size_t i = 0; i < grid_.spectral_size; ++i) g.values[i] *= e(-grid_.lambda(i) * t);
  for (std::size_t q = 0; q < bound_.size(); ++q) g.point_values[q] *= e(-bound_[q].lambda * t);
  return inverse(g);
}

GridState SpectralTransform::project(const GridState& f, const IntervalSet& s) const {
  SpectralFunction g = forward(f);
  for (std::size_t i = 0; i < grid_.spectral_size; ++i)
    if (!s.contains(grid_.lambda(i))) g.values[i] = 0.0;
  for (std::size_t q = 0; q < bound_.size(); ++q)
    if (!s.contains(bound_[q].lambda)) g.point_values[q] = 0.0;
  return inverse(g);
}

double spectral_norm(const SpectralFunction& g) { return std::sqrt(spectral_inner(g, g).real()); }

Complex spectral_inner(const SpectralFunction& a, const SpectralFunction& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
  s *= a.grid.dlambda();
  for (std::size_t q = 0; q < a.point_values.size(); ++q) s += std::conj(a.point_values[q]) * b.point_values[q];
  return s;
}

double shannon_identity_check(const SpectralTransform& tr, const GridState& f, int i, int eval_points) {
  const IntervalConfig& cfg = tr.cfg();
  if (i < 1 || i > cfg.n() - 1) throw ConfigError("shannon: component must be bounded");
  const Grid& grid = tr.grid();
  const auto parts = tr.component_transforms(f);
  const auto& fi = parts[i];
  const double len = cfg.lengths()[i - 1];
  const double window = 20.0 / len;
  double sup_diff = 0.0, sup_lhs = 0.0;
  for (int p = 0; p < eval_points; ++p) {
    const double lam = -window + 2.0 * window * (p + 0.5) / eval_points;
    Complex lhs = 0.0;
    for (std::size_t m = 0; m < grid.size; ++m)
      if (f.component_of(m) == i) lhs += e(-lam * grid.x(m)) * f[m];
    lhs *= grid.dx;
    Complex rhs = 0.0;
    for (std::size_t k = 0; k < grid.spectral_size; ++k) {
      if (fi[k] == Complex(0.0)) continue;
      const double xi = grid.lambda(k);
      rhs += std::conj(shannon(cfg, i, lam - xi)) * std::norm(tr.coefficient(i, k)) * fi[k];
    }
    rhs *= grid.dlambda();
    sup_diff = std::max(sup_diff, std::abs(lhs - rhs));
    sup_lhs = std::max(sup_lhs, std::abs(lhs));
  }
  return sup_lhs > 0 ? sup_diff / sup_lhs : sup_diff;
}

GridState region_projection(const GridState& f, Region region) {
  const int n = f.cfg().n();
  std::vector<int> keep;
  switch (region) {
    case Region::left:
      keep = {0};
      break;
    case Region::right:
      keep = {n};
      break;
    case Region::middle:
      for (int k = 1; k < n; ++k) keep.push_back(k);
      break;
  }
  return f.restricted(keep);
}

GridState semigroup_compress(const SpectralTransform& tr, const GridState& f, double t, Region region) {
  if (t < 0) throw ConfigError("semigroup: t must be non-negative");
  return region_projection(tr.evolve(region_projection(f, region), t), region);
}

GridState intertwiner_apply(const SpectralTransform& t1, const SpectralTransform& t2, const GridState& f) {
  const Grid& a = t1.grid();
  const Grid& b = t2.grid();
  if (a.size != b.size || a.spectral_size != b.spectral_size || a.dx != b.dx || a.x_min != b.x_min) {
    throw ConfigError("intertwiner: transforms must share the grid");
  }
  if (!t1.bound_states().empty() || !t2.bound_states().empty()) {
    throw NumericalError("degenerate", "intertwiner: boundary matrices have point spectrum on the grid");
  }
  return t2.inverse(t1.forward(f));
}

Complex intertwiner_multiplier(const IntervalConfig& cfg, const BoundaryMatrix& b1, const BoundaryMatrix& b2,
                               int j, double lambda) {
  CVector a1 = coefficients(cfg, b1, lambda);
  CVector a2 = coefficients(cfg, b2, lambda);
  if (std::abs(a1(j)) < 1e-10) throw NumericalError("division", "intertwiner: |A_j^(B1)| below 1e-10");
  return a2(j) / a1(j);
}

}  // namespace momspec
