#pragma once

#include <vector>

#include "momspec/boundary.hpp"
#include "momspec/intervals.hpp"

namespace momspec {

// B_{alpha beta}(z) = D_alpha(z)* B D_beta(z), entries b_ij e(z (beta_j - alpha_i)).
struct LambdaMatrix {
  Complex z;
  CMatrix full;
  Corner parts;
};

LambdaMatrix lambda_matrix(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);
CMatrix twisted_corner(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);

// D(z) = det(I - B'_{alpha beta}(z)).
Complex det_D(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);

// D~(z) = det(diag(e(z L_j)) - B').
Complex det_tilde(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);

// D(z) = e(z L_tot) D~(-z): evaluation through the lengths only.
Complex det_D_from_lengths(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);

struct DetDerivative {
  Complex tilde_scaled;  // (1/2 pi i) dD~/dz = sum_j L_j e(z L_j) D_j(z)
  Complex dD;            // dD/dz
};

DetDerivative det_D_derivative(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);

enum class Branch { nondegenerate, degenerate_u_outside_range, degenerate_u_in_range };
enum class Normalization { a0_equals_one, kernel_basis };

const char* branch_name(Branch b);

struct ScatteringSolution {
  Complex z;
  CVector a;  // A_0 .. A_n
  Branch branch = Branch::nondegenerate;
  int kernel_dim = 0;
  double sigma_min = 0.0;
  bool particular = true;  // false for pure-kernel members of a degenerate family
};

struct SolveResult {
  std::vector<ScatteringSolution> solutions;
  Warnings warnings;
};

// Solutions of B_{alpha beta}(z) (A_0..A_{n-1}) = (A_1..A_n).
SolveResult solve_coefficients(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z,
                               Normalization norm = Normalization::a0_equals_one);

// Same linear algebra for an arbitrary n x n matrix M in place of B_{alpha beta}(z):
// M (v_0..v_{n-1}) = (v_1..v_n).
SolveResult solve_shift_system(const CMatrix& m, Normalization norm = Normalization::a0_equals_one,
                               Complex z = 0.0);

// Coefficients with A_0 = 1 at a point where the solve is nondegenerate;
// falls back to the particular solution of the degenerate family.
CVector coefficients(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);

double boundary_residual(const IntervalConfig& cfg, const BoundaryMatrix& b,
                         const ScatteringSolution& s);
double shift_system_residual(const CMatrix& m, const CVector& v);

// psi_lambda(x); zero on removed intervals.
Complex eigenfunction_eval(const IntervalConfig& cfg, const CVector& a, double lambda, double x);
Complex eigenfunction_eval(const IntervalConfig& cfg, const BoundaryMatrix& b, double lambda, double x);

// || B f(beta) - f(alpha) || with one-sided traces of psi_lambda.
double endpoint_trace_residual(const IntervalConfig& cfg, const BoundaryMatrix& b,
                               const CVector& a, double lambda);

struct ResolventPair {
  CMatrix r;   // (I - B'_{alpha beta}(z))^-1
  CMatrix dr;  // dR/dz
};

// dR/dz = 2 pi i R delta(B'_{alpha beta}(z)) R, delta(M) = M L_beta - L_alpha M.
ResolventPair resolvent_and_derivative(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z);
CMatrix delta_ab(const IntervalConfig& cfg, const CMatrix& m);

// prod_k (1 - z_k e(lambda L_k)) where g B' g^-1 = diag(z_k).
Complex gauge_diag_det(const IntervalConfig& cfg, const BoundaryMatrix& b, const CMatrix& g,
                       Complex lambda);

}  // namespace momspec
