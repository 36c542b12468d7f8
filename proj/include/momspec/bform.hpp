#pragma once

#include "momspec/eigensolver.hpp"

namespace momspec {

// Sh_j(lambda) = int_{J_j} e(lambda x) dx for a bounded component j.
Complex shannon(const IntervalConfig& cfg, int j, double lambda);
double shannon_modulus_squared(double length, double lambda);

struct InnerProductOptions {
  double lambda_max = 0.0;  // 0 selects 200 / min_j L_j
  double tolerance = 1e-10;
  bool tail_correction = true;
};

struct InnerProductResult {
  Complex value;
  double error_bound = 0.0;
  double lambda_max = 0.0;
  Complex tail_correction;
};

// <B, C> = sum_j int A_j^B conj(A_j^C) |Sh_j|^2 d lambda over the bounded components.
InnerProductResult inner_product(const IntervalConfig& cfg, const BoundaryMatrix& b,
                                 const BoundaryMatrix& c, const InnerProductOptions& opts = {});

// n = 2 with B = [[a, b], ...], C = [[c, d], ...]:
// a conj(c) / (1 - b conj(d)) * L_1.
Complex inner_product_n2_closed_form(const IntervalConfig& cfg, const BoundaryMatrix& b,
                                     const BoundaryMatrix& c);
// Same quantity by quadrature over one period after periodizing |Sh_1|^2.
Complex inner_product_n2_periodized(const IntervalConfig& cfg, const BoundaryMatrix& b,
                                    const BoundaryMatrix& c, int nodes = 256);

// int_0^{1/L} (1 - b e(lambda L))^-1 (1 - conj(d) e(-lambda L))^-1 d lambda.
Complex geometric_series_integral(Complex b, Complex d, double length, int nodes = 256);

double poisson_kernel(Complex b, double xi);

struct PerShannonResult {
  double value = 0.0;
  double tail_bound = 0.0;
};

// sum_{|m| <= N} |Sh(lambda + m / L)|^2 for a component of length L.
PerShannonResult per_shannon(double length, double lambda, long truncation);

}  // namespace momspec
