#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "momspec/eigensolver.hpp"

namespace momspec {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  int skipped = 0;    // trials whose solve reported ill-conditioning; nothing was emitted
  double worst = 0.0;  // largest residual seen
  double tolerance = 0.0;
  std::string first_failure;
};

IntervalConfig random_config(int n, std::mt19937_64& rng);

SuiteResult suite_unitarity_system(int trials, std::uint64_t seed);
SuiteResult suite_eigen_relations(int trials, std::uint64_t seed);
SuiteResult suite_corner_norm_bound(int trials, std::uint64_t seed);
SuiteResult suite_degenerate_orthogonality(int trials, std::uint64_t seed);
SuiteResult suite_gauge_covariance(int trials, std::uint64_t seed);
SuiteResult suite_boundary_residual(int trials, std::uint64_t seed);

std::vector<SuiteResult> run_property_suites(int trials, std::uint64_t seed);

}  // namespace momspec
