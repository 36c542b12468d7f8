#include "momspec/intervals.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace momspec {

IntervalConfig::IntervalConfig(std::vector<double> betas, std::vector<double> alphas)
    : betas_(std::move(betas)), alphas_(std::move(alphas)) {
  if (betas_.empty()) throw ConfigError("intervals: need at least one removed interval");
  if (betas_.size() != alphas_.size()) {
    throw ConfigError("intervals: betas and alphas differ in length");
  }
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    if (!std::isfinite(betas_[i]) || !std::isfinite(alphas_[i])) {
      throw ConfigError("intervals: endpoints must be finite");
    }
  }
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    if (!(betas_[i] < alphas_[i])) {
      std::ostringstream os;
      os << "intervals: interlacing violated, need beta_" << i + 1 << " < alpha_" << i + 1 << " ("
         << betas_[i] << " >= " << alphas_[i] << ")";
      throw ConfigError(os.str());
    }
    if (i + 1 < betas_.size() && !(alphas_[i] < betas_[i + 1])) {
      std::ostringstream os;
      os << "intervals: interlacing violated, need alpha_" << i + 1 << " < beta_" << i + 2 << " ("
         << alphas_[i] << " >= " << betas_[i + 1] << ")";
      throw ConfigError(os.str());
    }
  }
}

IntervalConfig IntervalConfig::from_lengths(double beta1, const std::vector<double>& gaps,
                                            const std::vector<double>& lengths) {
  if (gaps.empty() || lengths.size() + 1 != gaps.size()) {
    throw ConfigError("intervals: need n gaps and n-1 lengths");
  }
  std::vector<double> b(gaps.size()), a(gaps.size());
  double x = beta1;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    b[i] = x;
    x += gaps[i];
    a[i] = x;
    if (i < lengths.size()) x += lengths[i];
  }
  return IntervalConfig(std::move(b), std::move(a));
}

LengthsAndGaps IntervalConfig::lengths_and_gaps() const {
  LengthsAndGaps r;
  for (int i = 0; i < n(); ++i) {
    r.gaps.push_back(alphas_[i] - betas_[i]);
    r.total_gap += r.gaps.back();
    if (i + 1 < n()) {
      r.lengths.push_back(betas_[i + 1] - alphas_[i]);
      r.total_length += r.lengths.back();
    }
  }
  return r;
}

std::vector<double> IntervalConfig::lengths() const { return lengths_and_gaps().lengths; }

double IntervalConfig::total_length() const { return lengths_and_gaps().total_length; }

double IntervalConfig::component_begin(int k) const {
  if (k == 0) return -std::numeric_limits<double>::infinity();
  return alphas_[k - 1];
}

double IntervalConfig::component_end(int k) const {
  if (k == n()) return std::numeric_limits<double>::infinity();
  return betas_[k];
}

Location IntervalConfig::classify(double x) const {
  Location loc;
  for (int k = 0; k < n(); ++k) {
    if (x < betas_[k]) {
      loc.component = k;
      return loc;
    }
    if (x <= alphas_[k]) {
      loc.removed = true;
      loc.gap = k + 1;
      loc.left_component = k;
      loc.right_component = k + 1;
      return loc;
    }
  }
  loc.component = n();
  return loc;
}

IntervalConfig IntervalConfig::shifted(double s) const {
  std::vector<double> b = betas_, a = alphas_;
  for (auto& v : b) v += s;
  for (auto& v : a) v += s;
  return IntervalConfig(std::move(b), std::move(a));
}

}  // namespace momspec
