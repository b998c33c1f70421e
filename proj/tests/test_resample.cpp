#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "strokeforge/resample.hpp"

using namespace strokeforge;

namespace {

Stroke random_walk(std::mt19937& rng, int steps) {
  std::uniform_real_distribution<double> turn(-0.9, 0.9);
  std::uniform_real_distribution<double> len(0.5, 2.5);
  Stroke s{{{10.0, 10.0}}};
  double heading = 0.0;
  for (int i = 0; i < steps; ++i) {
    heading += turn(rng);
    const double l = len(rng);
    s.points.push_back(s.points.back() + Point{l * std::cos(heading), l * std::sin(heading)});
  }
  return s;
}

Stroke semicircle(double r, int segments) {
  Stroke s;
  for (int k = 0; k <= segments; ++k) {
    const double t = std::numbers::pi * k / segments;
    s.points.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return s;
}

std::vector<double> gaps(const std::vector<Point>& pts) {
  std::vector<double> out;
  for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(distance(pts[i - 1], pts[i]));
  return out;
}

// Index of each sample in the presampled points, or -1.
std::vector<long> positions_in(const std::vector<Point>& samples, const std::vector<Point>& pre) {
  std::vector<long> idx;
  std::size_t from = 0;
  for (Point p : samples) {
    long found = -1;
    for (std::size_t k = from; k < pre.size(); ++k)
      if (pre[k] == p) {
        found = static_cast<long>(k);
        from = k + 1;
        break;
      }
    idx.push_back(found);
  }
  return idx;
}

}  // namespace

TEST_SUITE("resample") {
  TEST_CASE("parameter defaults and validation") {
    const auto p = ResampleParams::make(3.0);
    CHECK(p.presample_spacing == 1.0);
    CHECK(p.reach_threshold == 3.0);
    const auto q = ResampleParams::make(2.0, 0.25);
    CHECK(q.reach_threshold == 0.75);
    CHECK(ResampleParams::make(2.0, 0.5, 9.0).reach_threshold == 9.0);
    CHECK_THROWS_AS(ResampleParams::make(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ResampleParams::make(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(ResampleParams::make(NAN), std::invalid_argument);
    CHECK_THROWS_AS(ResampleParams::make(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ResampleParams::make(1.0, 1.0, -2.0), std::invalid_argument);
  }

  TEST_CASE("presample_constant") {
    const Stroke dot{{{4, 4}}};
    CHECK(presample_constant(dot, 1.0) == dot);

    const Stroke seg{{{0, 0}, {10, 0}}};
    const Stroke unit = presample_constant(seg, 1.0);
    REQUIRE(unit.points.size() == 11);
    for (std::size_t k = 0; k < 11; ++k) CHECK(unit.points[k] == Point{static_cast<double>(k), 0});

    const Stroke coarse = presample_constant(seg, 3.0);
    REQUIRE(coarse.points.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) CHECK(coarse.points[k].x == doctest::Approx(2.5 * static_cast<double>(k)));
    CHECK(coarse.points.back() == Point{10, 0});
  }

  TEST_CASE("presampling keeps endpoints and bounds spacing") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
      const Stroke s = random_walk(rng, 3 + trial % 10);
      const double spacing = 0.3 + 0.05 * trial;
      const Stroke p = presample_constant(s, spacing);
      CHECK(p.points.front() == s.points.front());
      CHECK(p.points.back() == s.points.back());
      for (double g : gaps(p.points)) CHECK(g <= spacing + 1e-9);
      const auto expected = static_cast<std::size_t>(std::ceil(arc_length(s.points) / spacing)) + 1;
      CHECK(p.points.size() == expected);
    }
  }

  TEST_CASE("reachability") {
    const Stroke line = presample_constant({{{0, 0}, {7, 7}}}, 1.0);
    const ReachMatrix all = reachability(line, 0.1);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) CHECK(all(i, j) == (j > i));

    const Stroke corner{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}};
    const ReachMatrix m = reachability(corner, 0.5);
    CHECK_FALSE(m(0, 4));
    for (std::size_t i = 0; i + 1 < 5; ++i) CHECK(m(i, i + 1));
    CHECK(m(0, 2));
    CHECK_FALSE(m(1, 3));  // (2,0) lies sqrt(2)/2 from the line through (1,0) and (2,1)
  }

  TEST_CASE("reachability threshold is strict") {
    const std::vector<Point> pts = {{0, 0}, {1, 1}, {2, 0}};
    CHECK_FALSE(reachable(pts, 0, 2, 1.0));
    CHECK(reachable(pts, 0, 2, std::nextafter(1.0, 2.0)));
  }

  TEST_CASE("single and two-point strokes") {
    const auto p = ResampleParams::make(3.0);
    const SampledStroke dot = max_accel_resample({{{5, 5}}}, p);
    CHECK(dot.samples == std::vector<Point>{{5, 5}});
    CHECK_FALSE(dot.fallback);

    const SampledStroke two = max_accel_resample({{{0, 0}, {0.5, 0.5}}}, p);
    CHECK(two.samples == std::vector<Point>{{0, 0}, {0.5, 0.5}});
    CHECK_FALSE(two.fallback);
  }

  TEST_CASE("straight stroke of length 12 follows the oracle") {
    const Stroke s{{{0, 0}, {12, 0}}};
    const auto p = ResampleParams::make(3.0);
    const auto pre = presample_constant(s, p.presample_spacing).points;
    REQUIRE(pre.size() == 13);
    const auto oracle = testing::brute_force_min_steps(pre, 3.0, 3.0);
    REQUIRE(oracle);
    CHECK(*oracle == 4);  // frozen oracle output

    const SampledStroke r = max_accel_resample(s, p);
    CHECK_FALSE(r.fallback);
    CHECK(r.samples.size() == *oracle + 1);
    CHECK(testing::satisfies_accel_bound(r.samples, 3.0));
    // Triangular speed profile: speeds rise then fall.
    const auto g = gaps(r.samples);
    const auto peak = std::max_element(g.begin(), g.end()) - g.begin();
    CHECK(std::is_sorted(g.begin(), g.begin() + peak + 1));
    CHECK(std::is_sorted(g.rbegin(), g.rend() - peak));
  }

  TEST_CASE("falls back to presampled points when no halting path exists") {
    // Spacing at or above a makes every single step violate the bound from rest.
    const auto p = ResampleParams::make(1.0, 1.0);
    const Stroke s{{{0, 0}, {5, 0}}};
    const SampledStroke r = max_accel_resample(s, p);
    CHECK(r.fallback);
    CHECK(r.samples == presample_constant(s, 1.0).points);
  }

  TEST_CASE("random strokes meet bound, monotonicity, corner fidelity and optimality") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const Stroke s = random_walk(rng, 4 + trial % 12);
      const double a = 1.5 + 0.5 * (trial % 4);
      const auto p = ResampleParams::make(a);
      const auto pre = presample_constant(s, p.presample_spacing).points;
      const SampledStroke r = max_accel_resample(s, p);
      CAPTURE(trial);
      REQUIRE_FALSE(r.fallback);
      CHECK(r.samples.front() == s.points.front());
      CHECK(r.samples.back() == s.points.back());
      CHECK(testing::satisfies_accel_bound(r.samples, a));

      const auto idx = positions_in(r.samples, pre);
      CHECK(std::find(idx.begin(), idx.end(), -1) == idx.end());
      for (std::size_t k = 1; k < idx.size(); ++k) {
        const auto from = static_cast<std::size_t>(idx[k - 1]);
        const auto to = static_cast<std::size_t>(idx[k]);
        for (std::size_t m = from + 1; m < to; ++m)
          CHECK(distance_to_line(pre[m], pre[from], pre[to]) < p.reach_threshold);
      }

      if (pre.size() <= 40) {
        const auto oracle = testing::brute_force_min_steps(pre, a, p.reach_threshold);
        REQUIRE(oracle);
        CHECK(r.samples.size() == *oracle + 1);
      }
      CHECK(max_accel_resample(s, p) == r);
    }
  }

  TEST_CASE("constant_velocity_resample") {
    const SampledStroke r = constant_velocity_resample({{{0, 0}, {10, 0}}}, 2.0);
    REQUIRE(r.samples.size() == 6);
    for (std::size_t k = 0; k < 6; ++k) CHECK(r.samples[k].x == doctest::Approx(2.0 * static_cast<double>(k)));
    CHECK(constant_velocity_resample({{{1, 1}}}, 2.0).samples == std::vector<Point>{{1, 1}});
    CHECK(constant_velocity_resample({{{0, 0}, {7, 0}}}, 2.0).samples.back() == Point{7, 0});
    CHECK_THROWS_AS(constant_velocity_resample({{{0, 0}, {1, 0}}}, 0.0), std::invalid_argument);
  }

  TEST_CASE("semicircle: constant velocity is uniform, max acceleration is not") {
    const Stroke arc = semicircle(20.0, 400);
    const auto cv = gaps(constant_velocity_resample(arc, 3.0).samples);
    // All but the last gap are one arc step; chords of a 3 px arc on r = 20 differ by < 0.1%.
    for (std::size_t k = 0; k + 1 < cv.size(); ++k) CHECK(cv[k] == doctest::Approx(cv.front()).epsilon(1e-3));

    const auto ma = gaps(max_accel_resample(arc, ResampleParams::make(3.0)).samples);
    const auto [lo, hi] = std::minmax_element(ma.begin(), ma.end());
    CHECK(*hi > 2.0 * *lo);
  }

  TEST_CASE("empty strokes are rejected") {
    CHECK_THROWS_AS(max_accel_resample(Stroke{}, ResampleParams::make(3.0)), std::invalid_argument);
    CHECK_THROWS_AS(presample_constant(Stroke{}, 1.0), std::invalid_argument);
  }
}
