#pragma once

#include <string>
#include <vector>

#include "momspec/pointspec.hpp"

namespace momspec {

struct OpenInterval {
  double r = 0.0;
  double s = 0.0;
  double length() const { return s - r; }
};

// Disjoint intervals inside (0, 1); the half-lines outside are glued and
// carry only the phase theta_0.
struct InfiniteConfig {
  std::vector<OpenInterval> intervals;
  std::string label;
  int level = 0;
  double total_length() const;
};

InfiniteConfig explicit_intervals(std::vector<OpenInterval> intervals);
InfiniteConfig cantor_complement(int level);
// Lengths 2^-k, k = 1..levels, packed left to right.
InfiniteConfig dyadic_lengths(int levels);

struct InfiniteSpectrum {
  PointSpectrum spectrum;
  std::string truncation_note;
};

// B = diag(e(theta_k)) acting on traces; eigenvalues solve lambda l_k - theta_k in Z.
// thetas empty means all zero; otherwise one phase per interval.
InfiniteSpectrum diagonal_point_spectrum(const InfiniteConfig& cfg, const std::vector<double>& thetas,
                                         double lo, double hi, double tolerance = 1e-9);

struct DenseProbe {
  std::vector<double> eigenvalues;  // per level, the progression member closest to lambda0
  std::vector<double> distances;
  double min_distance = 0.0;
};

// l_k = 2^-k; eigenvalues of level k are 2^k (theta_k + Z).
DenseProbe dense_spectrum_probe(const std::vector<double>& thetas, double lambda0, double lo, double hi);

}  // namespace momspec
