#include "momspec/infinite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace momspec {

double InfiniteConfig::total_length() const {
  double s = 0.0;
  for (const auto& iv : intervals) s += iv.length();
  return s;
}

InfiniteConfig explicit_intervals(std::vector<OpenInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const auto& iv = intervals[k];
    if (!(iv.r >= 0.0 && iv.r < iv.s && iv.s <= 1.0)) {
      throw ConfigError("infinite: intervals must satisfy 0 <= r < s <= 1");
    }
    if (k > 0 && intervals[k - 1].s > iv.r) throw ConfigError("infinite: intervals overlap");
  }
  InfiniteConfig cfg;
  cfg.intervals = std::move(intervals);
  cfg.label = "explicit";
  return cfg;
}

InfiniteConfig cantor_complement(int level) {
  if (level < 0) throw ConfigError("cantor: level must be non-negative");
  std::vector<OpenInterval> out;
  for (int j = 0; j <= level; ++j) {
    const double len = std::pow(3.0, -(j + 1));
    for (long mask = 0; mask < (1L << j); ++mask) {
      double a = 0.0;
      for (int l = 1; l <= j; ++l) {
        if (mask & (1L << (j - l))) a += 2.0 * std::pow(3.0, -l);
      }
      a += len;
      out.push_back({a, a + len});
    }
  }
  InfiniteConfig cfg = explicit_intervals(std::move(out));
  cfg.label = "middle-thirds-cantor";
  cfg.level = level;
  return cfg;
}

InfiniteConfig dyadic_lengths(int levels) {
  if (levels < 1) throw ConfigError("dyadic: need at least one level");
  std::vector<OpenInterval> out;
  for (int k = 1; k <= levels; ++k) out.push_back({1.0 - std::ldexp(1.0, -(k - 1)), 1.0 - std::ldexp(1.0, -k)});
  InfiniteConfig cfg = explicit_intervals(std::move(out));
  cfg.label = "dyadic";
  cfg.level = levels;
  return cfg;
}

InfiniteSpectrum diagonal_point_spectrum(const InfiniteConfig& cfg, const std::vector<double>& thetas, double lo,
                                         double hi, double tolerance) {
  if (!thetas.empty() && thetas.size() != cfg.intervals.size()) {
    throw ConfigError("infinite: need one phase per interval");
  }
  std::vector<Progression> gens;
  for (std::size_t k = 0; k < cfg.intervals.size(); ++k) {
    const double len = cfg.intervals[k].length();
    const double th = thetas.empty() ? 0.0 : thetas[k];
    gens.push_back({th / len, 1.0 / len, static_cast<int>(k) + 1});
  }
  InfiniteSpectrum out;
  out.spectrum.lo = lo;
  out.spectrum.hi = hi;
  out.spectrum.points = enumerate_progressions(gens, lo, hi, tolerance);
  for (auto& p : out.spectrum.points) {
    int count = 0;
    for (std::size_t k = 0; k < cfg.intervals.size(); ++k) {
      const double th = thetas.empty() ? 0.0 : thetas[k];
      const double v = p.lambda * cfg.intervals[k].length() - th;
      if (std::abs(v - std::round(v)) <= tolerance) ++count;
    }
    p.multiplicity = count;
  }
  out.spectrum.closed_form = gens;
  std::ostringstream os;
  os << "truncated at " << cfg.intervals.size() << " intervals";
  if (cfg.level > 0 || cfg.label == "middle-thirds-cantor") os << " (level " << cfg.level << ")";
  os << "; multiplicities grow without bound as the truncation increases where every progression meets";
  out.truncation_note = os.str();
  return out;
}

DenseProbe dense_spectrum_probe(const std::vector<double>& thetas, double lambda0, double lo, double hi) {
  DenseProbe out;
  out.min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double scale = std::ldexp(1.0, static_cast<int>(i) + 1);
    const double m = std::round(lambda0 / scale - thetas[i]);
    const double ev = scale * (thetas[i] + m);
    if (ev < lo || ev > hi) continue;
    out.eigenvalues.push_back(ev);
    out.distances.push_back(std::abs(ev - lambda0));
    out.min_distance = std::min(out.min_distance, out.distances.back());
  }
  return out;
}

}  // namespace momspec
