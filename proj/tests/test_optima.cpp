#include <cmath>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "secrecy/optima.hpp"
#include "secrecy/rates.hpp"

using namespace secrecy;

namespace {
const ChannelParams kRefChannel{1.0, 0.05, 1.0};
}

TEST_CASE("max-min rate and minimal power match their closed forms") {
  const MaxMinSolution sol = maxmin_point(kRefChannel, {100.0});
  CHECK(sol.r_min_star == doctest::Approx(2.4627067506701583).epsilon(1e-12));
  CHECK(sol.p_min_star == doctest::Approx(18.095238095238091).epsilon(1e-12));
  CHECK_FALSE(sol.power_limited);
  CHECK(std::abs(sol.p_min_star - 18.1) <= 0.05);

  // Above the threshold the achievable rate no longer depends on the budget.
  const MaxMinSolution sol60 = maxmin_point(kRefChannel, {60.0});
  CHECK(sol60.r_min_star == doctest::Approx(sol.r_min_star).epsilon(1e-14));
}

TEST_CASE("lambda interval endpoints and the power map") {
  const MaxMinSolution sol = maxmin_point(kRefChannel, {100.0});
  CHECK(sol.lambda_star_interval.lo == 0.0);
  CHECK(sol.lambda_star_interval.hi ==
        doctest::Approx(0.040952380952380955).epsilon(1e-12));

  // Default selection is the zero-noise member: minimal power, lambda = 0.
  CHECK(sol.chosen_lambda == 0.0);
  CHECK(sol.p_star == doctest::Approx(sol.p_min_star).epsilon(1e-14));

  // p_of_lambda at zero reproduces the minimal power; the budget is hit
  // exactly at the interval's upper endpoint.
  CHECK(p_of_lambda(kRefChannel, 0.0) == doctest::Approx(sol.p_min_star).epsilon(1e-14));
  CHECK(p_of_lambda(kRefChannel, sol.lambda_star_interval.hi) ==
        doctest::Approx(100.0).epsilon(1e-12));
  CHECK_THROWS_AS(p_of_lambda(kRefChannel, kRefChannel.ac / kRefChannel.a), std::domain_error);
  CHECK_THROWS_AS(p_of_lambda(kRefChannel, 0.9), std::domain_error);
}

TEST_CASE("every member of the optimal family achieves the max-min rate") {
  const MaxMinSolution sol = maxmin_point(kRefChannel, {100.0});
  for (int j = 0; j <= 10; ++j) {
    const double lambda = sol.lambda_star_interval.hi * j / 10.0;
    const MaxMinSolution pick = maxmin_point(kRefChannel, {100.0}, lambda);
    CHECK(pick.chosen_lambda == lambda);
    CHECK(pick.p_star <= 100.0 + 1e-9);
    const double r = symmetric_rate(kRefChannel, pick.p_star, lambda);
    CHECK(r == doctest::Approx(sol.r_min_star).epsilon(1e-12));
  }
  // Outside the interval the request is rejected.
  CHECK_THROWS_AS(maxmin_point(kRefChannel, {100.0}, 0.05), std::domain_error);
  CHECK_THROWS_AS(maxmin_point(kRefChannel, {100.0}, -0.01), std::domain_error);
}

TEST_CASE("power-limited regime uses the full budget with no noise") {
  const MaxMinSolution sol = maxmin_point(kRefChannel, {10.0});
  CHECK(sol.power_limited);
  CHECK(sol.chosen_lambda == 0.0);
  CHECK(sol.p_star == 10.0);
  CHECK(sol.lambda_star_interval.lo == 0.0);
  CHECK(sol.lambda_star_interval.hi == 0.0);
  CHECK(sol.r_min_star == doctest::Approx(2.3536369546147005).epsilon(1e-12));
  CHECK(sol.r_min_star == doctest::Approx(symmetric_rate(kRefChannel, 10.0, 0.0)).epsilon(1e-14));
  // No interior family exists below the threshold.
  CHECK_THROWS_AS(maxmin_point(kRefChannel, {10.0}, 0.01), std::domain_error);
}

TEST_CASE("strategy() assembles the symmetric operating point") {
  const MaxMinSolution sol = maxmin_point(kRefChannel, {100.0}, 0.02);
  const Strategy s = sol.strategy();
  CHECK(s.p1 == sol.p_star);
  CHECK(s.p2 == sol.p_star);
  CHECK(s.lambda1 == 0.02);
  CHECK(s.lambda2 == 0.02);
  const RatePair r = secrecy_rates(kRefChannel, s);
  CHECK(r.r1_raw == doctest::Approx(sol.r_min_star).epsilon(1e-12));
  CHECK(r.r2_raw == doctest::Approx(sol.r_min_star).epsilon(1e-12));
}

TEST_CASE("single-user optimum matches the closed form") {
  const SingleUserSolution sol = single_user_point(kRefChannel, {100.0}, 1);
  CHECK(sol.r_su_star == doctest::Approx(5.5436798043746123).epsilon(1e-12));
  CHECK(sol.delta == doctest::Approx(10.295630140987001).epsilon(1e-12));
  CHECK(sol.strategy.p1 == 100.0);
  CHECK(sol.strategy.p2 == doctest::Approx(8.8529810866542853).epsilon(1e-12));
  CHECK(sol.strategy.p2 < 50.0);  // helper spends less than half the budget
  CHECK(sol.strategy.lambda1 == 0.0);
  CHECK(sol.strategy.lambda2 == 1.0);

  // The strategy reproduces the claimed rate and silences the helper.
  const RatePair r = secrecy_rates(kRefChannel, sol.strategy);
  CHECK(r.r1_raw == doctest::Approx(sol.r_su_star).epsilon(1e-12));
  CHECK(std::abs(r.r2_raw) <= 1e-12);

  // User 2 is the mirror image.
  const SingleUserSolution sol2 = single_user_point(kRefChannel, {100.0}, 2);
  CHECK(sol2.r_su_star == doctest::Approx(sol.r_su_star).epsilon(1e-14));
  CHECK(sol2.strategy.p2 == 100.0);
  CHECK(sol2.strategy.p1 == doctest::Approx(sol.strategy.p2).epsilon(1e-14));
  CHECK(sol2.strategy.lambda1 == 1.0);
  CHECK(sol2.strategy.lambda2 == 0.0);

  CHECK_THROWS_AS(single_user_point(kRefChannel, {100.0}, 3), std::domain_error);
}

TEST_CASE("single-user rate grows with the power budget") {
  double prev = 0.0;
  for (const double P : {1.0, 5.0, 20.0, 60.0, 100.0, 500.0}) {
    const double r = single_user_point(kRefChannel, {P}, 1).r_su_star;
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("degenerate channels are rejected with a clear message") {
  try {
    single_user_point({1.0, 1.0, 1.0}, {100.0}, 1);
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("direct gain must exceed cross gain") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(maxmin_point({0.5, 0.8, 1.0}, {100.0}), std::domain_error);
  CHECK_THROWS_AS(critical_power({1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("critical power matches the closed form and its defining identity") {
  const double pc = critical_power(kRefChannel);
  CHECK(pc == doctest::Approx(53.206127385111508).epsilon(1e-12));
  CHECK(std::abs(pc - 53.2) <= 0.05);

  // At P = P_c time sharing the single-user points exactly meets the
  // max-min rate.
  const double r_min = maxmin_point(kRefChannel, {pc}).r_min_star;
  const double r_su = single_user_point(kRefChannel, {pc}, 1).r_su_star;
  CHECK(std::abs(r_min - 0.5 * r_su) <= 1e-9);
}

TEST_CASE("critical power grows as the cross gain approaches the direct gain") {
  // As ac -> a the max-min rate collapses, so ever-smaller budgets favour
  // time sharing; as ac -> 0 interference costs nothing and P_c explodes.
  const double pc_mid = critical_power({1.0, 0.2, 1.0});
  const double pc_low = critical_power({1.0, 0.01, 1.0});
  const double pc_high = critical_power({1.0, 0.8, 1.0});
  CHECK(pc_low > pc_mid);
  CHECK(pc_mid > pc_high);
}

TEST_CASE("operating-mode comparison at the three reference budgets") {
  const double pc = critical_power(kRefChannel);

  const ModeComparison below = compare_operating_modes(kRefChannel, {30.0});
  CHECK(below.mode == OperatingMode::max_min);
  CHECK(below.rate_max_min > below.rate_time_share);

  const ModeComparison at = compare_operating_modes(kRefChannel, {pc});
  CHECK(at.mode == OperatingMode::tie);
  CHECK(std::abs(at.difference) <= 1e-9);

  const ModeComparison above = compare_operating_modes(kRefChannel, {100.0});
  CHECK(above.mode == OperatingMode::time_sharing);
  CHECK(above.rate_time_share > above.rate_max_min);

  CHECK(to_string(OperatingMode::max_min) == std::string("max-min"));
  CHECK(to_string(OperatingMode::time_sharing) == std::string("time-sharing"));
  CHECK(to_string(OperatingMode::tie) == std::string("tie"));
}

TEST_CASE("comparison rates are per-user achievable rates") {
  const ModeComparison cmp = compare_operating_modes(kRefChannel, {100.0});
  CHECK(cmp.rate_max_min ==
        doctest::Approx(maxmin_point(kRefChannel, {100.0}).r_min_star).epsilon(1e-14));
  CHECK(cmp.rate_time_share ==
        doctest::Approx(0.5 * single_user_point(kRefChannel, {100.0}, 1).r_su_star)
            .epsilon(1e-14));
  CHECK(cmp.difference ==
        doctest::Approx(cmp.rate_time_share - cmp.rate_max_min).epsilon(1e-14));
}

TEST_CASE("interval helper") {
  const Interval iv{0.0, 0.25};
  CHECK(iv.contains(0.0));
  CHECK(iv.contains(0.25));
  CHECK(iv.contains(0.2500000001, 1e-9));
  CHECK_FALSE(iv.contains(0.26));
  CHECK_FALSE(iv.contains(-0.01));
  CHECK(iv.width() == doctest::Approx(0.25));
}
