#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "momspec/common.hpp"

namespace momspec {

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kDegeneracyTolerance = 1e-8;
inline constexpr double kSupportTolerance = 1e-12;

// B = [[u, B'], [c, w*]] : u = first column above the last row, B' the
// (n-1)x(n-1) upper-right block, c the lower-left entry and w* the rest of
// the last row.
struct Corner {
  CVector u;
  CMatrix corner;
  Complex c;
  CVector w;
};

Corner split_corner(const CMatrix& m);
CMatrix assemble_corner(const Corner& parts);

class BoundaryMatrix {
 public:
  // Throws ConfigError when ||B*B - I||_F exceeds the tolerance.
  explicit BoundaryMatrix(CMatrix m, double tolerance = kUnitarityTolerance);

  // Nearest unitary matrix (polar factor).
  static BoundaryMatrix project(const CMatrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double unitarity_residual() const { return residual_; }

  Corner corner() const { return split_corner(m_); }

 private:
  CMatrix m_;
  double residual_;
};

double unitarity_residual(const CMatrix& m);

// Constructors for the standard families.
BoundaryMatrix permutation_from_cycles(int n, const std::vector<std::vector<int>>& cycles);
BoundaryMatrix diagonal_phases(const std::vector<double>& thetas);
BoundaryMatrix su2_block(Complex a, Complex b);          // [[a, b], [-conj b, conj a]]
BoundaryMatrix su2_case1(Complex a, Complex b);          // [[a, b, 0], [-conj b, conj a, 0], [0, 0, 1]]
BoundaryMatrix su2_case2(Complex a, Complex b);          // [[0, a, b], [0, -conj b, conj a], [1, 0, 0]]
BoundaryMatrix shift_template(int n, Complex c);         // [[0, I], [c, 0]]

// Layout [[B', u], [w*, c]] used by the cyclic-shift convention.
CMatrix to_shifted_layout(const BoundaryMatrix& b);
BoundaryMatrix from_shifted_layout(const CMatrix& shifted);

struct DegeneracyInfo {
  bool degenerate = false;
  double sigma_min = 0.0;
  CMatrix kernel;  // orthonormal columns spanning the numerical kernel of I - B'
};

// 1 in sp(B'), judged by the smallest singular value of I - M.
DegeneracyInfo corner_degeneracy(const CMatrix& corner_block);
DegeneracyInfo is_degenerate(const BoundaryMatrix& b);

struct OrthogonalityResiduals {
  double u_residual = 0.0;
  double w_residual = 0.0;
};

// |<u, zeta>| and |<w, zeta>|. Throws NumericalError above 1e-10.
OrthogonalityResiduals degenerate_orthogonality_check(const BoundaryMatrix& b, const CVector& zeta);

struct NormalityReport {
  bool normal = false;
  double commutator_norm = 0.0;
  bool proportional = false;  // u = mu w with |mu| = 1, or u = w = 0
};

NormalityReport is_corner_normal(const BoundaryMatrix& b);

// [[g u, g B' g^-1], [c, (g w)*]]. Throws ConfigError for non-unitary g.
BoundaryMatrix gauge_action(const CMatrix& g, const BoundaryMatrix& b);

struct DecompositionReport {
  std::vector<int> permutation;          // 0-based, blocks concatenated
  std::vector<std::vector<int>> blocks;  // 0-based indices, each sorted
  bool is_decomposable = false;
  bool operator_split = false;
};

DecompositionReport decompose(const BoundaryMatrix& b);

struct SplitFormReport {
  bool split = false;
  bool consistent = true;  // u = 0, w = 0 and B' unitary agree
  double u_norm = 0.0;
  double w_norm = 0.0;
  double corner_unitarity = 0.0;
};

SplitFormReport operator_split_form_report(const BoundaryMatrix& b);
bool operator_split_form(const BoundaryMatrix& b);

// Random matrices for property tests.
CMatrix random_unitary(int n, std::mt19937_64& rng);
BoundaryMatrix random_boundary(int n, std::mt19937_64& rng);
// Degenerate: B' has a unit eigenvector with eigenvalue exactly 1.
BoundaryMatrix random_degenerate(int n, std::mt19937_64& rng, CVector* zeta = nullptr);
// Normal corner: u and w proportional.
BoundaryMatrix random_normal_corner(int n, std::mt19937_64& rng);

}  // namespace momspec
