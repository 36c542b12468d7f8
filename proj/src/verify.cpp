#include "momspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace momspec {

namespace {

// Runs `trial` with per-trial generators; `trial` returns the residual, or a
// negative value when there was nothing to check.
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed, double tol,
                      const std::function<double(std::mt19937_64&, std::string&)>& trial) {
  SuiteResult r;
  r.name = name;
  r.trials = trials;
  r.tolerance = tol;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1));
    std::string label;
    double res = 0.0;
    try {
      res = trial(rng, label);
    } catch (const std::exception& e) {
      res = std::numeric_limits<double>::infinity();
      label += std::string(" threw: ") + e.what();
    }
    if (res < 0) {
      ++r.skipped;
      continue;
    }
    r.worst = std::max(r.worst, res);
    if (!(res <= tol)) {
      if (r.failures == 0) {
        std::ostringstream os;
        os << "trial " << t << " " << label << " residual " << res;
        r.first_failure = os.str();
      }
      ++r.failures;
    }
  }
  return r;
}

int random_n(std::mt19937_64& rng, int lo = 2, int hi = 6) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Permutation matrix with random unimodular entries.
BoundaryMatrix random_monomial(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> phase(0.0, 1.0);
  CMatrix m = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(perm[j], j) = e(phase(rng));
  return BoundaryMatrix(m);
}

}  // namespace

IntervalConfig random_config(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> start(-2.0, 2.0), span(0.2, 2.0);
  std::vector<double> gaps(n), lengths(n - 1);
  for (auto& g : gaps) g = span(rng);
  for (auto& l : lengths) l = span(rng);
  return IntervalConfig::from_lengths(start(rng), gaps, lengths);
}

SuiteResult suite_unitarity_system(int trials, std::uint64_t seed) {
  return run_suite("unitarity-system", trials, seed, 1e-10, [](std::mt19937_64& rng, std::string& label) {
    const int n = random_n(rng);
    label = "n=" + std::to_string(n);
    Corner p = random_boundary(n, rng).corner();
    const auto k = p.corner.rows();
    CMatrix id = CMatrix::Identity(k, k);
    double r = (p.corner.adjoint() * p.corner + p.w * p.w.adjoint() - id).norm();
    r = std::max(r, (p.corner * p.corner.adjoint() + p.u * p.u.adjoint() - id).norm());
    r = std::max(r, (p.corner * p.w + std::conj(p.c) * p.u).norm());
    r = std::max(r, std::abs(p.w.squaredNorm() + std::norm(p.c) - 1.0));
    r = std::max(r, std::abs(p.u.squaredNorm() + std::norm(p.c) - 1.0));
    return r;
  });
}

SuiteResult suite_eigen_relations(int trials, std::uint64_t seed) {
  return run_suite("eigen-relations", trials, seed, 1e-10, [](std::mt19937_64& rng, std::string& label) {
    const int n = random_n(rng);
    label = "n=" + std::to_string(n);
    Corner p = random_boundary(n, rng).corner();
    const double c2 = std::norm(p.c);
    double r = (p.corner.adjoint() * p.corner * p.w - c2 * p.w).norm();
    r = std::max(r, (p.corner * p.corner.adjoint() * p.u - c2 * p.u).norm());
    return r;
  });
}

SuiteResult suite_corner_norm_bound(int trials, std::uint64_t seed) {
  return run_suite("corner-norm-bound", trials, seed, 0.0, [](std::mt19937_64& rng, std::string& label) {
    const int n = random_n(rng);
    label = "n=" + std::to_string(n);
    Corner p = random_boundary(n, rng).corner();
    Eigen::JacobiSVD<CMatrix> svd(p.corner);
    // Residual is the amount by which |c| exceeds ||B'||, beyond rounding.
    return std::max(0.0, std::abs(p.c) - svd.singularValues()(0) - 1e-12);
  });
}

SuiteResult suite_degenerate_orthogonality(int trials, std::uint64_t seed) {
  return run_suite("degenerate-orthogonality", trials, seed, 1e-10, [](std::mt19937_64& rng, std::string& label) {
    const int n = random_n(rng);
    label = "n=" + std::to_string(n);
    CVector zeta;
    BoundaryMatrix b = random_degenerate(n, rng, &zeta);
    DegeneracyInfo info = is_degenerate(b);
    if (!info.degenerate) return std::numeric_limits<double>::infinity();
    Corner p = b.corner();
    double r = std::max(std::abs(p.u.dot(zeta)), std::abs(p.w.dot(zeta)));
    for (Eigen::Index q = 0; q < info.kernel.cols(); ++q) {
      r = std::max(r, std::abs(p.u.dot(info.kernel.col(q))));
      r = std::max(r, std::abs(p.w.dot(info.kernel.col(q))));
    }
    return r;
  });
}

SuiteResult suite_gauge_covariance(int trials, std::uint64_t seed) {
  return run_suite("gauge-covariance", trials, seed, 1e-10, [](std::mt19937_64& rng, std::string& label) {
    const int n = random_n(rng);
    IntervalConfig cfg = random_config(n, rng);
    BoundaryMatrix b = random_boundary(n, rng);
    std::uniform_real_distribution<double> lam(-10.0, 10.0);
    const double lambda = lam(rng);
    label = "n=" + std::to_string(n) + " lambda=" + std::to_string(lambda);
    BoundaryMatrix m(lambda_matrix(cfg, b, lambda).full);
    CMatrix g = random_unitary(n - 1, rng);
    BoundaryMatrix mg = gauge_action(g, m);
    SolveResult s0 = solve_shift_system(m.matrix());
    SolveResult s1 = solve_shift_system(mg.matrix());
    CVector v = s0.solutions.front().a;
    CVector vg = v;
    vg.segment(1, n - 1) = g * v.segment(1, n - 1);
    return (s1.solutions.front().a - vg).norm() / std::max(1.0, v.norm());
  });
}

SuiteResult suite_boundary_residual(int trials, std::uint64_t seed) {
  return run_suite("boundary-residual", trials, seed, 1e-10, [](std::mt19937_64& rng, std::string& label) {
    const int n = random_n(rng);
    IntervalConfig cfg = random_config(n, rng);
    std::uniform_int_distribution<int> family(0, 3);
    std::uniform_real_distribution<double> lam(-10.0, 10.0), im(-0.3, 0.3);
    const int fam = family(rng);
    BoundaryMatrix b = fam == 0   ? random_boundary(n, rng)
                       : fam == 1 ? random_degenerate(n, rng)
                       : fam == 2 ? random_monomial(n, rng)
                                  : shift_template(n, e(lam(rng)));
    // Family 1 is degenerate at z = 0; other families use random complex z.
    const Complex z = fam == 1 ? Complex(0.0) : Complex(lam(rng), fam == 0 ? im(rng) : 0.0);
    label = "n=" + std::to_string(n) + " family=" + std::to_string(fam);
    SolveResult solved;
    try {
      solved = solve_coefficients(cfg, b, z);
    } catch (const NumericalError& e) {
      if (e.code() == "ill-conditioned") return -1.0;
      throw;
    }
    double worst = 0.0;
    for (const auto& s : solved.solutions) worst = std::max(worst, boundary_residual(cfg, b, s));
    return worst;
  });
}

std::vector<SuiteResult> run_property_suites(int trials, std::uint64_t seed) {
  return {suite_unitarity_system(trials, seed),       suite_eigen_relations(trials, seed),
          suite_corner_norm_bound(trials, seed),      suite_degenerate_orthogonality(trials, seed),
          suite_gauge_covariance(trials, seed),       suite_boundary_residual(trials, seed)};
}

}  // namespace momspec
