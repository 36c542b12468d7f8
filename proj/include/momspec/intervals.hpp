#pragma once

#include <vector>

#include "momspec/common.hpp"

namespace momspec {

struct Location {
  bool removed = false;
  int component = -1;  // valid when !removed
  int gap = -1;        // 1-based index k of [beta_k, alpha_k] when removed
  int left_component = -1;
  int right_component = -1;
};

struct LengthsAndGaps {
  std::vector<double> lengths;  // L_k = beta_{k+1} - alpha_k, k = 1..n-1
  std::vector<double> gaps;     // G_i = alpha_i - beta_i, i = 1..n
  double total_length = 0.0;
  double total_gap = 0.0;
};

// Omega = J_0 u ... u J_n, the complement of [beta_k, alpha_k], k = 1..n.
// Arrays are stored 0-based: betas()[0] is beta_1.
class IntervalConfig {
 public:
  IntervalConfig(std::vector<double> betas, std::vector<double> alphas);

  static IntervalConfig from_lengths(double beta1, const std::vector<double>& gaps,
                                     const std::vector<double>& lengths);

  int n() const { return static_cast<int>(betas_.size()); }
  const std::vector<double>& betas() const { return betas_; }
  const std::vector<double>& alphas() const { return alphas_; }
  double beta(int i) const { return betas_[i - 1]; }
  double alpha(int i) const { return alphas_[i - 1]; }

  LengthsAndGaps lengths_and_gaps() const;
  std::vector<double> lengths() const;
  double total_length() const;

  // Left and right ends of component J_k (infinite for the half-lines).
  double component_begin(int k) const;
  double component_end(int k) const;

  Location classify(double x) const;

  IntervalConfig shifted(double s) const;

 private:
  std::vector<double> betas_;
  std::vector<double> alphas_;
};

}  // namespace momspec
