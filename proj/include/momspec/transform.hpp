#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "momspec/eigensolver.hpp"
#include "momspec/pointspec.hpp"

namespace momspec {

// Cell-centred samples x_m = x_min + (m + 1/2) dx, m = 0..size-1. The
// transforms run on the samples that survive removal of the gaps, so the
// frequencies are lambda_k = k / (spectral_size dx), k in
// [-spectral_size/2, spectral_size/2).
struct Grid {
  double x_min = 0.0;
  double dx = 0.0;
  std::size_t size = 0;
  std::size_t spectral_size = 0;  // samples outside the removed intervals
  double horizon = 0.0;
  bool aligned = false;  // every endpoint lies on a cell edge

  double x(std::size_t m) const { return x_min + (static_cast<double>(m) + 0.5) * dx; }
  double x_max() const { return x_min + static_cast<double>(size) * dx; }
  double dlambda() const { return 1.0 / (static_cast<double>(spectral_size) * dx); }
  long frequency_index(std::size_t i) const;
  double lambda(std::size_t i) const { return static_cast<double>(frequency_index(i)) * dlambda(); }
};

struct GridOptions {
  double horizon = 0.0;
  double margin = 0.0;         // extra room beyond the horizon on both sides
  std::optional<double> dx;    // default: every L_k and G_i spans >= samples_per_span cells
  int samples_per_span = 64;
  bool power_of_two = true;
  double padding = 0.0;        // extra room on the left, absorbs periodic wrap-around
};

Grid make_grid(const IntervalConfig& cfg, const GridOptions& opts);

// Room needed for multiply scattered waves to decay below tol before they
// wrap around the periodic box: diameter * ln(1/tol) / -ln(rho), rho the
// largest non-unimodular eigenvalue modulus of B'. Capped at cap * diameter.
double resonance_padding(const IntervalConfig& cfg, const BoundaryMatrix& b, double tol = 1e-8,
                         double cap = 400.0);

class GridState {
 public:
  GridState(IntervalConfig cfg, Grid grid);

  const IntervalConfig& cfg() const { return cfg_; }
  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](std::size_t m) const { return values_[m]; }
  // -1 for removed samples.
  int component_of(std::size_t m) const { return component_[m]; }
  const std::vector<int>& components() const { return component_; }

  // Writes are ignored on removed samples.
  void set(std::size_t m, Complex v);
  void add(std::size_t m, Complex v);

  double norm() const;
  double component_mass(int k) const;
  std::vector<double> component_masses() const;
  Complex inner(const GridState& other) const;  // conjugate-linear in *this
  GridState restricted(const std::vector<int>& keep) const;
  GridState operator-(const GridState& other) const;

 private:
  IntervalConfig cfg_;
  Grid grid_;
  std::vector<Complex> values_;
  std::vector<int> component_;
};

GridState sample(const IntervalConfig& cfg, const Grid& grid,
                 const std::function<Complex(double)>& f);

struct GaussianBump {
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
  Complex amplitude = 1.0;
  int component = -1;  // restrict to one component; -1 keeps all of Omega
  Complex operator()(double x) const;
};

GridState sample_bumps(const IntervalConfig& cfg, const Grid& grid,
                       const std::vector<GaussianBump>& bumps);

struct BoundState {
  double lambda = 0.0;
  CVector zeta;  // amplitudes on J_1..J_{n-1}, orthonormal under sum_j L_j |zeta_j|^2
};

struct SpectralFunction {
  Grid grid;
  std::vector<Complex> values;          // (V_B f)(lambda_k), k in FFT order, spectral_size entries
  std::vector<Complex> point_values;    // coefficients on bound states
};

// Union of half-open intervals [lo, hi).
struct IntervalSet {
  std::vector<std::pair<double, double>> parts;
  bool contains(double x) const;
  static IntervalSet everything();
};

// V_B and friends for one (cfg, B, grid). Continuous part uses the
// coefficients A_j(lambda_k); bound states in the frequency band cover the
// point spectrum.
class SpectralTransform {
 public:
  SpectralTransform(IntervalConfig cfg, BoundaryMatrix b, Grid grid);

  const Grid& grid() const { return grid_; }
  const IntervalConfig& cfg() const { return cfg_; }
  const BoundaryMatrix& boundary() const { return b_; }
  const Warnings& warnings() const { return warnings_; }
  const std::vector<BoundState>& bound_states() const { return bound_; }
  Complex coefficient(int j, std::size_t i) const { return coeffs_[static_cast<std::size_t>(j) * grid_.spectral_size + i]; }

  SpectralFunction forward(const GridState& f) const;
  GridState inverse(const SpectralFunction& g) const;
  GridState evolve(const GridState& f, double t) const;
  GridState project(const GridState& f, const IntervalSet& s) const;
  SpectralFunction zero_spectral() const;

  // Per-component transforms (P_j f)^(lambda_k).
  std::vector<std::vector<Complex>> component_transforms(const GridState& f) const;

 private:
  IntervalConfig cfg_;
  BoundaryMatrix b_;
  Grid grid_;
  std::vector<Complex> coeffs_;  // (n+1) x spectral_size
  std::vector<std::size_t> kept_;  // sample index of each gap-collapsed position
  std::vector<double> shift_;      // per component: x_m - x(0) - q dx for its samples
  std::vector<BoundState> bound_;
  Warnings warnings_;
};

double spectral_norm(const SpectralFunction& g);
Complex spectral_inner(const SpectralFunction& a, const SpectralFunction& b);

// Relative sup residual of (P_i f)^(lambda) = int Sh_i-conjugate(lambda - xi) |A_i|^2 (P_i f)^(xi) dxi.
double shannon_identity_check(const SpectralTransform& tr, const GridState& f, int i,
                              int eval_points = 200);

enum class Region { left, right, middle };

GridState region_projection(const GridState& f, Region region);
GridState semigroup_compress(const SpectralTransform& tr, const GridState& f, double t, Region region);

// W = V_{B2}* V_{B1}; both transforms share the grid.
GridState intertwiner_apply(const SpectralTransform& t1, const SpectralTransform& t2, const GridState& f);

// A_j^{B2}(lambda) / A_j^{B1}(lambda).
Complex intertwiner_multiplier(const IntervalConfig& cfg, const BoundaryMatrix& b1,
                               const BoundaryMatrix& b2, int j, double lambda);

}  // namespace momspec
