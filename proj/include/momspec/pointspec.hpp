#pragma once

#include <optional>
#include <vector>

#include "momspec/eigensolver.hpp"

namespace momspec {

struct SpectralPoint {
  double lambda = 0.0;
  int multiplicity = 0;
  double sigma_min = 0.0;
};

// lambda = offset + m * step, m integer; one generator per bounded component.
struct Progression {
  double offset = 0.0;
  double step = 0.0;
  int component = 0;
};

struct PointSpectrum {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<SpectralPoint> points;
  std::optional<std::vector<Progression>> closed_form;
  Warnings warnings;
};

struct ScanOptions {
  double step = 0.0;  // 0 selects 1 / (16 max(L_tot, 1))
  double candidate_threshold = 1e-4;
  double root_threshold = kDegeneracyTolerance;
  double collision_tolerance = 1e-10;
};

double sigma_min_at(const IntervalConfig& cfg, const BoundaryMatrix& b, double lambda);

PointSpectrum find_point_spectrum(const IntervalConfig& cfg, const BoundaryMatrix& b, double lo,
                                  double hi, const ScanOptions& opts = {});

// Template shapes: B' diagonal (the [[0, I], [c, 0]] family included).
// Unimodular diagonal entries e(theta_k) contribute (-theta_k + Z) / L_k.
std::optional<PointSpectrum> closed_form_spectrum(const IntervalConfig& cfg,
                                                  const BoundaryMatrix& b, double lo, double hi);

std::vector<SpectralPoint> enumerate_progressions(const std::vector<Progression>& gens, double lo,
                                                  double hi, double tolerance = 1e-9);

// Sum of multiplicities in [a - T, a + T) divided by 2T.
double density(const PointSpectrum& s, double center, double half_width);

struct Rect {
  double re_lo, re_hi, im_lo, im_hi;
};

struct ZeroCount {
  int count = 0;
  double winding = 0.0;  // unrounded
  double min_boundary_modulus = 0.0;
};

ZeroCount complex_zero_count(const IntervalConfig& cfg, const BoundaryMatrix& b, const Rect& r);

// Zeros of 1 - b e(z L) inside r, counted from the logarithm branches.
int n2_pole_count(Complex b, double length, const Rect& r);

// |e(lambda L2 - phi0) - (1 - w e(lambda L1 + phi0)) / (w - e(lambda L1 + phi0))|
// for the case-2 form with a = w e(phi0), 0 < w < 1.
double torus_motion_residual(const IntervalConfig& cfg, Complex a, double lambda);

struct SpectralPairCheck {
  double modulus_residual = 0.0;  // ||A_1| - |A_2||
  bool equal = false;             // A_1 = A_2 within 1e-8
};

// Kernel vector zeta of I - B'_{alpha beta}(lambda) at a point of the spectrum
// (n = 3), normalized to unit length.
SpectralPairCheck spectral_pair_check(const IntervalConfig& cfg, const BoundaryMatrix& b,
                                      double lambda);

// Points reduced modulo `period` into [0, period), sorted, merged within tol.
std::vector<double> fold_points(const std::vector<SpectralPoint>& pts, double period,
                                double tol = 1e-9);
double max_circular_gap(const std::vector<double>& folded, double period);

}  // namespace momspec
