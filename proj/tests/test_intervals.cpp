#include <doctest.h>

#include <cmath>
#include <random>

#include "momspec/intervals.hpp"

using namespace momspec;

TEST_CASE("classify_point on half-lines, bounded components and removed intervals") {
  IntervalConfig one({0.0}, {1.0});
  CHECK(one.classify(-3.0).component == 0);
  CHECK(one.classify(2.0).component == 1);

  IntervalConfig cfg({0.0, 1.5, 3.0}, {1.0, 2.0, 3.5});
  CHECK(cfg.classify(1.2).component == 1);
  CHECK_FALSE(cfg.classify(1.2).removed);
  CHECK(cfg.classify(10.0).component == 3);
  Location gap = cfg.classify(1.7);
  CHECK(gap.removed);
  CHECK(gap.gap == 2);
  CHECK(gap.left_component == 1);
  CHECK(gap.right_component == 2);
}

TEST_CASE("endpoints are reported as removed with both neighbours") {
  IntervalConfig cfg({0.0, 1.5, 3.0}, {1.0, 2.0, 3.5});
  for (double x : {0.0, 1.0, 1.5, 2.0, 3.0, 3.5}) CHECK(cfg.classify(x).removed);
  Location at = cfg.classify(1.0);
  CHECK(at.left_component == 0);
  CHECK(at.right_component == 1);
}

TEST_CASE("lengths and gaps") {
  const double phi = std::sqrt(2.0) - 1.0;
  IntervalConfig ex({0.0, 1.5, 3.0}, {1.0, 2.0, 3.0 + phi});
  auto lg = ex.lengths_and_gaps();
  REQUIRE(lg.lengths.size() == 2);
  CHECK(lg.lengths[0] == doctest::Approx(0.5));
  CHECK(lg.lengths[1] == doctest::Approx(1.0));
  CHECK(lg.gaps[0] == doctest::Approx(1.0));
  CHECK(lg.gaps[1] == doctest::Approx(0.5));
  CHECK(lg.gaps[2] == doctest::Approx(phi));

  IntervalConfig single({0.0}, {1.0});
  CHECK(single.lengths_and_gaps().lengths.empty());
  CHECK(single.lengths_and_gaps().gaps[0] == 1.0);

  IntervalConfig two({0.0, 2.0}, {1.0, 3.0});
  auto t = two.lengths_and_gaps();
  CHECK(t.lengths == std::vector<double>{1.0});
  CHECK(t.total_length == 1.0);
  CHECK(t.total_gap == 2.0);
}

TEST_CASE("interlacing violations name the inequality") {
  CHECK_THROWS_WITH_AS(IntervalConfig({0.0, 0.5}, {1.0, 2.0}), doctest::Contains("alpha_1 < beta_2"), ConfigError);
  CHECK_THROWS_WITH_AS(IntervalConfig({0.0}, {0.0}), doctest::Contains("beta_1 < alpha_1"), ConfigError);
  CHECK_THROWS_AS(IntervalConfig({0.0, 1.0}, {0.5}), ConfigError);
  CHECK_THROWS_AS(IntervalConfig({}, {}), ConfigError);
}

TEST_CASE("bounded measure from classification equals L_tot") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> span(0.1, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<double> g(n), l(n - 1);
    for (auto& v : g) v = span(rng);
    for (auto& v : l) v = span(rng);
    IntervalConfig cfg = IntervalConfig::from_lengths(-1.0, g, l);
    const double lo = cfg.betas().front(), hi = cfg.alphas().back();
    const int samples = 200000;
    const double h = (hi - lo) / samples;
    int bounded = 0;
    for (int m = 0; m < samples; ++m) {
      Location loc = cfg.classify(lo + (m + 0.5) * h);
      if (!loc.removed && loc.component >= 1 && loc.component <= n - 1) ++bounded;
    }
    CHECK(bounded * h == doctest::Approx(cfg.total_length()).epsilon(1e-3));
  }
}

TEST_CASE("endpoints round-trip through (beta_1, G, L)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> span(0.1, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<double> g(n), l(n - 1);
    for (auto& v : g) v = span(rng);
    for (auto& v : l) v = span(rng);
    IntervalConfig cfg = IntervalConfig::from_lengths(0.25, g, l);
    auto lg = cfg.lengths_and_gaps();
    IntervalConfig back = IntervalConfig::from_lengths(cfg.betas().front(), lg.gaps, lg.lengths);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(back.betas()[i] - cfg.betas()[i]) <= 1e-14);
      CHECK(std::abs(back.alphas()[i] - cfg.alphas()[i]) <= 1e-14);
    }
  }
}
