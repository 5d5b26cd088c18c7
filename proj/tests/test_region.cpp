#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "secrecy/optima.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/region.hpp"

using namespace secrecy;

namespace {

const ChannelParams kRefChannel{1.0, 0.05, 1.0};
const PowerConstraint kP100{100.0};
const GridSpec kCoarse{15, 9, 0, 0.2};

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
             const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

TEST_CASE("axis intercepts") {
  const auto [max_r1, max_r2] = axis_intercepts(kRefChannel, kP100, true);
  const double r_su = single_user_point(kRefChannel, kP100, 1).r_su_star;
  CHECK(max_r1.r1 == doctest::Approx(r_su).epsilon(1e-14));
  CHECK(max_r1.r2 == 0.0);
  CHECK(max_r2.r2 == doctest::Approx(r_su).epsilon(1e-14));
  CHECK(max_r2.r1 == 0.0);

  // Without artificial noise the best corner is pure peak-power signalling
  // against a silent partner.
  const auto [off_r1, off_r2] = axis_intercepts(kRefChannel, kP100, false);
  CHECK(off_r1.r1 == doctest::Approx(4.073248982030639).epsilon(1e-12));
  CHECK(off_r1.r1 ==
        doctest::Approx(secrecy_rates(kRefChannel, {100.0, 0.0, 0.0, 0.0}).r1).epsilon(1e-14));
  CHECK(off_r1.r2 == 0.0);
  CHECK(off_r2.r2 == doctest::Approx(off_r1.r1).epsilon(1e-14));
  CHECK(off_r1.r1 < r_su);

  // A channel with no secrecy collapses to the origin.
  const auto [deg1, deg2] = axis_intercepts({1.0, 1.0, 1.0}, kP100, false);
  CHECK(deg1.r1 == 0.0);
  CHECK(deg2.r2 == 0.0);
}

TEST_CASE("pareto_filter removes dominated and duplicate points") {
  const std::vector<RatePair> pts = {
      RatePair::from_clamped(1.0, 1.0), RatePair::from_clamped(2.0, 0.5),
      RatePair::from_clamped(0.5, 2.0), RatePair::from_clamped(1.0, 1.0),
      RatePair::from_clamped(0.9, 0.9), RatePair::from_clamped(2.0, 0.4),
      RatePair::from_clamped(0.0, 0.0)};
  const std::vector<RatePair> front = pareto_filter(pts);
  REQUIRE(front.size() == 3);
  CHECK(front[0].r1 == 0.5);
  CHECK(front[0].r2 == 2.0);
  CHECK(front[1].r1 == 1.0);
  CHECK(front[1].r2 == 1.0);
  CHECK(front[2].r1 == 2.0);
  CHECK(front[2].r2 == 0.5);

  // r1 ascending, r2 strictly descending along a Pareto frontier.
  for (std::size_t i = 1; i < front.size(); ++i) {
    CHECK(front[i].r1 > front[i - 1].r1);
    CHECK(front[i].r2 < front[i - 1].r2);
  }

  CHECK(pareto_filter({}).empty());
  const std::vector<RatePair> single = {RatePair::from_clamped(1.5, 0.25)};
  CHECK(pareto_filter(single).size() == 1);
}

TEST_CASE("sampled frontier is Pareto-maximal, ordered, and achievable") {
  const RegionEstimate region = sample_region(kRefChannel, kP100, kCoarse);
  REQUIRE(!region.frontier.empty());

  for (std::size_t i = 0; i < region.frontier.size(); ++i) {
    const FrontierSample& fs = region.frontier[i];
    // Reported rates match re-evaluating the stored strategy exactly.
    const RatePair re = secrecy_rates(region.channel, fs.strategy);
    CHECK(fs.rates.r1 == re.r1);
    CHECK(fs.rates.r2 == re.r2);
    CHECK(fs.rates.r1 >= 0.0);
    CHECK(fs.rates.r2 >= 0.0);
    CHECK(fs.strategy.p1 <= 100.0 + 1e-9);
    CHECK(fs.strategy.p2 <= 100.0 + 1e-9);
    if (i > 0) {
      CHECK(fs.rates.r1 > region.frontier[i - 1].rates.r1);
      CHECK(fs.rates.r2 < region.frontier[i - 1].rates.r2);
    }
  }

  // No sample dominates another (quadratic check on the reduced set).
  for (std::size_t i = 0; i < region.frontier.size(); ++i)
    for (std::size_t j = 0; j < region.frontier.size(); ++j) {
      if (i == j) continue;
      const RatePair& x = region.frontier[i].rates;
      const RatePair& y = region.frontier[j].rates;
      const bool dominates = x.r1 >= y.r1 && x.r2 >= y.r2 &&
                             (x.r1 > y.r1 || x.r2 > y.r2);
      CHECK_FALSE(dominates);
    }
}

TEST_CASE("hull is convex, counterclockwise, and anchored at the origin") {
  const RegionEstimate region = sample_region(kRefChannel, kP100, kCoarse);
  REQUIRE(region.hull.size() >= 3);
  CHECK(region.hull.front().x() == 0.0);
  CHECK(region.hull.front().y() == 0.0);

  const std::size_t n = region.hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& o = region.hull[i];
    const Eigen::Vector2d& a = region.hull[(i + 1) % n];
    const Eigen::Vector2d& b = region.hull[(i + 2) % n];
    CHECK(cross(o, a, b) >= -1e-9);  // every turn is a left turn
  }

  // Hull vertices are frontier samples, exact intercepts, or the origin.
  const auto [max_r1, max_r2] = axis_intercepts(kRefChannel, kP100, true);
  for (const Eigen::Vector2d& v : region.hull) {
    bool known = (v.x() == 0.0 && v.y() == 0.0) ||
                 (v - max_r1.clamped()).norm() <= 1e-12 ||
                 (v - max_r2.clamped()).norm() <= 1e-12;
    for (const FrontierSample& fs : region.frontier)
      known = known || (v - fs.rates.clamped()).norm() <= 1e-12;
    CHECK(known);
  }
}

TEST_CASE("hull_contains accepts members and rejects outsiders") {
  const RegionEstimate region = sample_region(kRefChannel, kP100, kCoarse);
  const double r_su = single_user_point(kRefChannel, kP100, 1).r_su_star;
  const double r_min = maxmin_point(kRefChannel, kP100).r_min_star;

  CHECK(hull_contains(region, RatePair::from_clamped(0.0, 0.0)));
  CHECK(hull_contains(region, RatePair::from_clamped(r_su, 0.0), 1e-9));
  CHECK(hull_contains(region, RatePair::from_clamped(0.0, r_su), 1e-9));
  CHECK(hull_contains(region, RatePair::from_clamped(r_min, r_min), 1e-6));
  CHECK(hull_contains(region, RatePair::from_clamped(1.0, 1.0)));
  CHECK_FALSE(hull_contains(region, RatePair::from_clamped(10.0, 10.0)));
  CHECK_FALSE(hull_contains(region, RatePair::from_clamped(r_su, r_su)));
  CHECK_FALSE(hull_contains(region, RatePair::from_clamped(0.0, r_su + 0.01)));

  // Every frontier sample lies in its own hull.
  for (const FrontierSample& fs : region.frontier)
    CHECK(hull_contains(region, fs.rates, 1e-9));
}

TEST_CASE("zero power budget collapses the region to the origin") {
  const RegionEstimate region = sample_region(kRefChannel, {0.0}, GridSpec{3, 3, 0, 0.5});
  REQUIRE(region.frontier.size() == 1);
  CHECK(region.frontier[0].rates.r1 == 0.0);
  CHECK(region.frontier[0].rates.r2 == 0.0);
  REQUIRE(region.hull.size() == 1);
  CHECK(region.hull[0].x() == 0.0);
  CHECK(hull_contains(region, RatePair::from_clamped(0.0, 0.0)));
  CHECK_FALSE(hull_contains(region, RatePair::from_clamped(0.1, 0.0)));
}

TEST_CASE("artificial noise enlarges the region") {
  const ChannelParams ch{1.0, 0.2, 1.0};
  const GridSpec grid{21, 9, 0, 0.2};
  const RegionEstimate with_an = sample_region(ch, kP100, grid, true);
  const RegionEstimate without = sample_region(ch, kP100, grid, false);
  CHECK(with_an.with_artificial_noise);
  CHECK_FALSE(without.with_artificial_noise);

  // AN-off frontier strategies never inject noise.
  for (const FrontierSample& fs : without.frontier) {
    CHECK(fs.strategy.lambda1 == 0.0);
    CHECK(fs.strategy.lambda2 == 0.0);
  }

  // Every AN-off hull vertex is achievable with artificial noise too.
  for (const Eigen::Vector2d& v : without.hull)
    CHECK(hull_contains(with_an, RatePair::from_clamped(v.x(), v.y()), 1e-6));

  // And the AN-on intercept strictly dominates the AN-off one.
  const double on_r1 = axis_intercepts(ch, kP100, true).first.r1;
  const double off_r1 = axis_intercepts(ch, kP100, false).first.r1;
  CHECK(on_r1 > off_r1);
}

TEST_CASE("timeshare interpolates clamped rate pairs") {
  const RatePair a = RatePair::from_clamped(4.0, 0.0);
  const RatePair b = RatePair::from_clamped(0.0, 2.0);
  const RatePair at_a = timeshare(a, b, 0.0);
  CHECK(at_a.r1 == 4.0);
  CHECK(at_a.r2 == 0.0);
  const RatePair at_b = timeshare(a, b, 1.0);
  CHECK(at_b.r1 == 0.0);
  CHECK(at_b.r2 == 2.0);
  const RatePair mid = timeshare(a, b, 0.5);
  CHECK(mid.r1 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mid.r2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(timeshare(a, b, -0.1), std::domain_error);
  CHECK_THROWS_AS(timeshare(a, b, 1.1), std::domain_error);
}

TEST_CASE("time sharing the single-user corners beats max-min above the critical power") {
  const auto [c1_hi, c2_hi] = axis_intercepts(kRefChannel, kP100, true);
  const RatePair mid_hi = timeshare(c1_hi, c2_hi, 0.5);
  const double r_min_hi = maxmin_point(kRefChannel, kP100).r_min_star;
  CHECK(mid_hi.r1 == doctest::Approx(mid_hi.r2).epsilon(1e-12));
  CHECK(mid_hi.r1 > r_min_hi);

  // The midpoint stays inside the hull: it lies on the chord between two
  // hull vertices.
  const RegionEstimate region = sample_region(kRefChannel, kP100, kCoarse);
  CHECK(hull_contains(region, mid_hi, 1e-9));

  // Below the critical power the ordering flips.
  const PowerConstraint p30{30.0};
  const auto [c1_lo, c2_lo] = axis_intercepts(kRefChannel, p30, true);
  const RatePair mid_lo = timeshare(c1_lo, c2_lo, 0.5);
  CHECK(mid_lo.r1 < maxmin_point(kRefChannel, p30).r_min_star);
}

TEST_CASE("region sampling is deterministic and thread-count invariant") {
  const GridSpec grid{9, 5, 0, 0.3};
  const RegionEstimate base = sample_region(kRefChannel, kP100, grid);
  for (const char* threads : {"1", "5"}) {
    setenv("SECRECY_REGION_THREADS", threads, 1);
    const RegionEstimate again = sample_region(kRefChannel, kP100, grid);
    REQUIRE(again.frontier.size() == base.frontier.size());
    for (std::size_t i = 0; i < base.frontier.size(); ++i) {
      CHECK(again.frontier[i].rates.r1 == base.frontier[i].rates.r1);
      CHECK(again.frontier[i].rates.r2 == base.frontier[i].rates.r2);
    }
    REQUIRE(again.hull.size() == base.hull.size());
    for (std::size_t i = 0; i < base.hull.size(); ++i)
      CHECK(again.hull[i] == base.hull[i]);
  }
  unsetenv("SECRECY_REGION_THREADS");
}
