#include "momspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace momspec {

LambdaMatrix lambda_matrix(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  const int n = b.dim();
  if (cfg.n() != n) throw ConfigError("boundary matrix dimension does not match interval count");
  LambdaMatrix lm;
  lm.z = z;
  lm.full.resize(n, n);
  const auto& al = cfg.alphas();
  const auto& be = cfg.betas();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lm.full(i, j) = b(i, j) * e(z * (be[j] - al[i]));
  lm.parts = split_corner(lm.full);
  return lm;
}

CMatrix twisted_corner(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  const int n = b.dim();
  if (cfg.n() != n) throw ConfigError("boundary matrix dimension does not match interval count");
  CMatrix m(n - 1, n - 1);
  const auto& al = cfg.alphas();
  const auto& be = cfg.betas();
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) m(i, j) = b(i, j + 1) * e(z * (be[j + 1] - al[i]));
  return m;
}

Complex det_D(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  CMatrix m = twisted_corner(cfg, b, z);
  if (m.rows() == 0) return 1.0;
  return (CMatrix::Identity(m.rows(), m.cols()) - m).determinant();
}

namespace {

CMatrix tilde_matrix(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  CMatrix m = -b.corner().corner;
  const auto len = cfg.lengths();
  for (std::size_t j = 0; j < len.size(); ++j) m(j, j) += e(z * len[j]);
  return m;
}

Complex principal_minor(const CMatrix& m, Eigen::Index skip) {
  const Eigen::Index k = m.rows();
  if (k == 1) return 1.0;
  CMatrix sub(k - 1, k - 1);
  for (Eigen::Index i = 0, si = 0; i < k; ++i) {
    if (i == skip) continue;
    for (Eigen::Index j = 0, sj = 0; j < k; ++j) {
      if (j == skip) continue;
      sub(si, sj++) = m(i, j);
    }
    ++si;
  }
  return sub.determinant();
}

Complex tilde_scaled_derivative(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  CMatrix m = tilde_matrix(cfg, b, z);
  const auto len = cfg.lengths();
  Complex s = 0.0;
  for (std::size_t j = 0; j < len.size(); ++j) {
    s += len[j] * e(z * len[j]) * principal_minor(m, static_cast<Eigen::Index>(j));
  }
  return s;
}

}  // namespace

Complex det_tilde(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  if (b.dim() < 2) return 1.0;
  return tilde_matrix(cfg, b, z).determinant();
}

Complex det_D_from_lengths(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  return e(z * cfg.total_length()) * det_tilde(cfg, b, -z);
}

DetDerivative det_D_derivative(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  DetDerivative d;
  if (b.dim() < 2) return d;
  d.tilde_scaled = tilde_scaled_derivative(cfg, b, z);
  const double lt = cfg.total_length();
  const Complex two_pi_i = 2.0 * pi * I_unit;
  d.dD = two_pi_i * lt * det_D(cfg, b, z) -
         two_pi_i * e(z * lt) * tilde_scaled_derivative(cfg, b, -z);
  return d;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::nondegenerate:
      return "nondegenerate";
    case Branch::degenerate_u_outside_range:
      return "degenerate-u-outside-range";
    case Branch::degenerate_u_in_range:
      return "degenerate-u-in-range";
  }
  return "unknown";
}

SolveResult solve_shift_system(const CMatrix& m, Normalization norm, Complex z) {
  (void)norm;
  const Eigen::Index n = m.rows();
  Corner p = split_corner(m);
  SolveResult out;
  auto make = [&](Complex a0, const CVector& mid, Complex an) {
    ScatteringSolution s;
    s.z = z;
    s.a.resize(n + 1);
    s.a(0) = a0;
    s.a.segment(1, n - 1) = mid;
    s.a(n) = an;
    return s;
  };
  if (n == 1) {
    ScatteringSolution s = make(1.0, CVector(0), p.c);
    s.sigma_min = 1.0;
    out.solutions.push_back(s);
    return out;
  }
  const Eigen::Index k = n - 1;
  CMatrix a = CMatrix::Identity(k, k) - p.corner;
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smin = sv(k - 1);
  int kdim = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    if (sv(i) < kDegeneracyTolerance) ++kdim;

  if (kdim == 0) {
    if (sv(0) / smin > 1e12) {
      throw NumericalError("ill-conditioned", "solve: condition number of I - B' exceeds 1e12");
    }
    if (smin < 1e-6) {
      std::ostringstream os;
      os << "smallest singular value " << smin << " is close to the degeneracy threshold";
      out.warnings.push_back({"near-degenerate", os.str()});
    }
    CVector x = svd.solve(p.u);
    ScatteringSolution s = make(1.0, x, p.c + p.w.dot(x));
    s.sigma_min = smin;
    out.solutions.push_back(s);
    return out;
  }

  CMatrix kernel = svd.matrixV().rightCols(kdim);
  const CMatrix& u_mat = svd.matrixU();
  const CMatrix& v_mat = svd.matrixV();
  CVector zeta0 = CVector::Zero(k);
  for (Eigen::Index i = 0; i < k - kdim; ++i) {
    zeta0 += v_mat.col(i) * (u_mat.col(i).dot(p.u) / sv(i));
  }
  const double res = (a * zeta0 - p.u).norm();
  const bool in_range = res <= 1e-8 * p.u.norm() || p.u.norm() <= 1e-14;
  const Branch br = in_range ? Branch::degenerate_u_in_range : Branch::degenerate_u_outside_range;
  if (in_range) {
    ScatteringSolution s = make(1.0, zeta0, p.c + p.w.dot(zeta0));
    s.branch = br;
    s.kernel_dim = kdim;
    s.sigma_min = smin;
    out.solutions.push_back(s);
  } else {
    out.warnings.push_back({"no-normalized-solution",
                            "u is outside the range of I - B'; only kernel solutions exist"});
  }
  for (int q = 0; q < kdim; ++q) {
    CVector zeta = kernel.col(q);
    ScatteringSolution s = make(0.0, zeta, p.w.dot(zeta));
    s.branch = br;
    s.kernel_dim = kdim;
    s.sigma_min = smin;
    s.particular = false;
    out.solutions.push_back(s);
  }
  return out;
}

SolveResult solve_coefficients(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z,
                               Normalization norm) {
  return solve_shift_system(lambda_matrix(cfg, b, z).full, norm, z);
}

CVector coefficients(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  SolveResult r = solve_coefficients(cfg, b, z);
  return r.solutions.front().a;
}

double shift_system_residual(const CMatrix& m, const CVector& v) {
  const Eigen::Index n = m.rows();
  const double scale = std::max(1.0, v.norm());
  return (m * v.head(n) - v.tail(n)).norm() / scale;
}

double boundary_residual(const IntervalConfig& cfg, const BoundaryMatrix& b,
                         const ScatteringSolution& s) {
  return shift_system_residual(lambda_matrix(cfg, b, s.z).full, s.a);
}

Complex eigenfunction_eval(const IntervalConfig& cfg, const CVector& a, double lambda, double x) {
  Location loc = cfg.classify(x);
  if (loc.removed) return 0.0;
  return a(loc.component) * e(lambda * x);
}

Complex eigenfunction_eval(const IntervalConfig& cfg, const BoundaryMatrix& b, double lambda,
                           double x) {
  return eigenfunction_eval(cfg, coefficients(cfg, b, lambda), lambda, x);
}

double endpoint_trace_residual(const IntervalConfig& cfg, const BoundaryMatrix& b, const CVector& a,
                               double lambda) {
  const int n = cfg.n();
  CVector at_beta(n), at_alpha(n);
  for (int i = 0; i < n; ++i) {
    at_beta(i) = a(i) * e(lambda * cfg.betas()[i]);
    at_alpha(i) = a(i + 1) * e(lambda * cfg.alphas()[i]);
  }
  return (b.matrix() * at_beta - at_alpha).norm() / std::max(1.0, a.norm());
}

CMatrix delta_ab(const IntervalConfig& cfg, const CMatrix& m) {
  const Eigen::Index k = m.rows();
  CMatrix d(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      d(i, j) = m(i, j) * (cfg.betas()[j + 1] - cfg.alphas()[i]);
  return d;
}

ResolventPair resolvent_and_derivative(const IntervalConfig& cfg, const BoundaryMatrix& b, Complex z) {
  CMatrix m = twisted_corner(cfg, b, z);
  const Eigen::Index k = m.rows();
  CMatrix a = CMatrix::Identity(k, k) - m;
  Eigen::JacobiSVD<CMatrix> svd(a);
  if (k > 0 && svd.singularValues()(k - 1) <= 1e-10) {
    throw NumericalError("pole", "resolvent: z is within tolerance of a pole");
  }
  ResolventPair out;
  out.r = a.inverse();
  out.dr = 2.0 * pi * I_unit * out.r * delta_ab(cfg, m) * out.r;
  return out;
}

Complex gauge_diag_det(const IntervalConfig& cfg, const BoundaryMatrix& b, const CMatrix& g,
                       Complex lambda) {
  CMatrix d = g * b.corner().corner * g.inverse();
  CMatrix off = d;
  off.diagonal().setZero();
  if (off.norm() > 1e-8 * std::max(1.0, d.norm())) {
    throw ConfigError("gauge_diag_det: g does not diagonalize B'");
  }
  const auto len = cfg.lengths();
  Complex p = 1.0;
  for (std::size_t k = 0; k < len.size(); ++k) p *= 1.0 - d(k, k) * e(lambda * len[k]);
  return p;
}

}  // namespace momspec
