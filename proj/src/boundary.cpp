#include "momspec/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace momspec {

Corner split_corner(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  Corner p;
  p.u = m.block(0, 0, n - 1, 1);
  p.corner = m.block(0, 1, n - 1, n - 1);
  p.c = m(n - 1, 0);
  p.w = m.block(n - 1, 1, 1, n - 1).adjoint();
  return p;
}

CMatrix assemble_corner(const Corner& p) {
  const Eigen::Index n = p.corner.rows() + 1;
  CMatrix m(n, n);
  m.block(0, 0, n - 1, 1) = p.u;
  m.block(0, 1, n - 1, n - 1) = p.corner;
  m(n - 1, 0) = p.c;
  m.block(n - 1, 1, 1, n - 1) = p.w.adjoint();
  return m;
}

double unitarity_residual(const CMatrix& m) {
  return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).norm();
}

BoundaryMatrix::BoundaryMatrix(CMatrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw ConfigError("boundary: matrix must be square and non-empty");
  }
  if (!m_.allFinite()) throw ConfigError("boundary: matrix has non-finite entries");
  residual_ = momspec::unitarity_residual(m_);
  if (residual_ > tolerance) {
    std::ostringstream os;
    os << "boundary: matrix is not unitary, ||B*B - I||_F = " << residual_ << " > " << tolerance;
    throw ConfigError(os.str());
  }
}

BoundaryMatrix BoundaryMatrix::project(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return BoundaryMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

BoundaryMatrix permutation_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) throw ConfigError("permutation: n must be positive");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> seen(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1;
      int to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from >= n) throw ConfigError("permutation: cycle entry out of range");
      if (seen[from]) throw ConfigError("permutation: index repeated across cycles");
      seen[from] = true;
      image[from] = to;
    }
  }
  CMatrix m = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(image[j], j) = 1.0;
  return BoundaryMatrix(m);
}

BoundaryMatrix diagonal_phases(const std::vector<double>& thetas) {
  const int n = static_cast<int>(thetas.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = e(thetas[i]);
  return BoundaryMatrix(m);
}

BoundaryMatrix su2_block(Complex a, Complex b) {
  CMatrix m(2, 2);
  m << a, b, -std::conj(b), std::conj(a);
  return BoundaryMatrix(m);
}

BoundaryMatrix su2_case1(Complex a, Complex b) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = -std::conj(b);
  m(1, 1) = std::conj(a);
  m(2, 2) = 1.0;
  return BoundaryMatrix(m);
}

BoundaryMatrix su2_case2(Complex a, Complex b) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 1) = a;
  m(0, 2) = b;
  m(1, 1) = -std::conj(b);
  m(1, 2) = std::conj(a);
  m(2, 0) = 1.0;
  return BoundaryMatrix(m);
}

BoundaryMatrix shift_template(int n, Complex c) {
  if (n < 2) throw ConfigError("template: n must be at least 2");
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  m(n - 1, 0) = c;
  return BoundaryMatrix(m);
}

CMatrix to_shifted_layout(const BoundaryMatrix& b) {
  // B S with S the cyclic shift moving the first column to the end.
  const int n = b.dim();
  CMatrix out(n, n);
  for (int j = 0; j < n; ++j) out.col(j) = b.matrix().col((j + 1) % n);
  return out;
}

BoundaryMatrix from_shifted_layout(const CMatrix& shifted) {
  const Eigen::Index n = shifted.rows();
  CMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m.col((j + 1) % n) = shifted.col(j);
  return BoundaryMatrix(m);
}

DegeneracyInfo corner_degeneracy(const CMatrix& corner_block) {
  DegeneracyInfo info;
  const Eigen::Index k = corner_block.rows();
  if (k == 0) {
    info.sigma_min = 1.0;
    info.kernel = CMatrix(0, 0);
    return info;
  }
  CMatrix a = CMatrix::Identity(k, k) - corner_block;
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  info.sigma_min = s(k - 1);
  int dim = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (s(i) < kDegeneracyTolerance) ++dim;
  }
  info.degenerate = dim > 0;
  info.kernel = svd.matrixV().rightCols(dim);
  return info;
}

DegeneracyInfo is_degenerate(const BoundaryMatrix& b) {
  return corner_degeneracy(b.corner().corner);
}

OrthogonalityResiduals degenerate_orthogonality_check(const BoundaryMatrix& b, const CVector& zeta) {
  Corner p = b.corner();
  OrthogonalityResiduals r;
  r.u_residual = std::abs(p.u.dot(zeta));
  r.w_residual = std::abs(p.w.dot(zeta));
  if (r.u_residual > 1e-10 || r.w_residual > 1e-10) {
    std::ostringstream os;
    os << "degenerate orthogonality violated: |<u,zeta>| = " << r.u_residual
       << ", |<w,zeta>| = " << r.w_residual;
    throw NumericalError("orthogonality", os.str());
  }
  return r;
}

NormalityReport is_corner_normal(const BoundaryMatrix& b) {
  Corner p = b.corner();
  NormalityReport r;
  CMatrix comm = p.corner.adjoint() * p.corner - p.corner * p.corner.adjoint();
  r.commutator_norm = comm.norm();
  r.normal = r.commutator_norm <= 1e-10;
  const double nu = p.u.norm(), nw = p.w.norm();
  if (nu <= 1e-10 && nw <= 1e-10) {
    r.proportional = true;
  } else if (nu > 1e-10 && nw > 1e-10) {
    Complex mu = p.w.dot(p.u) / p.w.squaredNorm();
    r.proportional = (p.u - mu * p.w).norm() <= 1e-10 && std::abs(std::abs(mu) - 1.0) <= 1e-10;
  }
  return r;
}

BoundaryMatrix gauge_action(const CMatrix& g, const BoundaryMatrix& b) {
  const int n = b.dim();
  if (g.rows() != n - 1 || g.cols() != n - 1) throw ConfigError("gauge: g must be (n-1)x(n-1)");
  if (unitarity_residual(g) > kUnitarityTolerance) throw ConfigError("gauge: g is not unitary");
  Corner p = b.corner();
  Corner q;
  q.u = g * p.u;
  q.corner = g * p.corner * g.adjoint();
  q.c = p.c;
  q.w = g * p.w;
  return BoundaryMatrix(assemble_corner(q));
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

DecompositionReport decompose(const BoundaryMatrix& b) {
  const int n = b.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(b(i, j)) > kSupportTolerance) {
        int ri = find_root(parent, i), rj = find_root(parent, j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  DecompositionReport r;
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = find_root(parent, i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(r.blocks.size());
      r.blocks.emplace_back();
    }
    r.blocks[block_of[root]].push_back(i);
  }
  for (const auto& blk : r.blocks) {
    const auto k = static_cast<Eigen::Index>(blk.size());
    CMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = b(blk[i], blk[j]);
    if (unitarity_residual(sub) > kUnitarityTolerance) {
      throw NumericalError("decompose", "extracted block is not unitary");
    }
    r.permutation.insert(r.permutation.end(), blk.begin(), blk.end());
  }
  r.is_decomposable = r.blocks.size() > 1;
  r.operator_split = operator_split_form(b);
  return r;
}

SplitFormReport operator_split_form_report(const BoundaryMatrix& b) {
  SplitFormReport r;
  if (b.dim() < 2) {
    r.split = true;
    return r;
  }
  Corner p = b.corner();
  r.u_norm = p.u.norm();
  r.w_norm = p.w.norm();
  r.corner_unitarity = unitarity_residual(p.corner);
  const bool a = r.u_norm <= 1e-10, c = r.w_norm <= 1e-10, d = r.corner_unitarity <= 1e-10;
  r.split = a;
  r.consistent = (a == c) && (a == d);
  return r;
}

bool operator_split_form(const BoundaryMatrix& b) { return operator_split_form_report(b).split; }

CMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

BoundaryMatrix random_boundary(int n, std::mt19937_64& rng) {
  return BoundaryMatrix(random_unitary(n, rng));
}

namespace {

// Unitary whose first column is the unit vector x.
CMatrix complete_to_unitary(const CVector& x, std::mt19937_64& rng) {
  const auto n = x.size();
  CMatrix m = random_unitary(static_cast<int>(n), rng);
  m.col(0) = x;
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ();
  q.col(0) *= qr.matrixQR()(0, 0);
  return q;
}

}  // namespace

BoundaryMatrix random_degenerate(int n, std::mt19937_64& rng, CVector* zeta_out) {
  if (n < 2) throw ConfigError("random_degenerate: n must be at least 2");
  std::normal_distribution<double> g(0.0, 1.0);
  CVector zeta(n - 1);
  for (int i = 0; i < n - 1; ++i) zeta(i) = Complex(g(rng), g(rng));
  zeta.normalize();
  CVector in = CVector::Zero(n), out = CVector::Zero(n);
  in.tail(n - 1) = zeta;
  out.head(n - 1) = zeta;
  CMatrix q1 = complete_to_unitary(in, rng);
  CMatrix q2 = complete_to_unitary(out, rng);
  CMatrix mid = CMatrix::Identity(n, n);
  if (n > 1) mid.bottomRightCorner(n - 1, n - 1) = random_unitary(n - 1, rng);
  if (zeta_out) *zeta_out = zeta;
  return BoundaryMatrix::project(q2 * mid * q1.adjoint());
}

BoundaryMatrix random_normal_corner(int n, std::mt19937_64& rng) {
  if (n < 2) throw ConfigError("random_normal_corner: n must be at least 2");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = 0.05 + 0.9 * unit(rng);
  const double s = std::sqrt(1.0 - r * r);
  Corner p;
  p.corner = CMatrix::Zero(n - 1, n - 1);
  p.corner(0, 0) = std::polar(r, 2 * pi * unit(rng));
  for (int k = 1; k < n - 1; ++k) p.corner(k, k) = e(unit(rng));
  p.c = std::polar(r, 2 * pi * unit(rng));
  p.u = CVector::Zero(n - 1);
  p.u(0) = s;
  p.w = CVector::Zero(n - 1);
  p.w(0) = -std::conj(p.c) * s / p.corner(0, 0);
  BoundaryMatrix base(assemble_corner(p));
  return gauge_action(random_unitary(n - 1, rng), base);
}

}  // namespace momspec
