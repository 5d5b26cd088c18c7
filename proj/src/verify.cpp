#include "secrecy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "secrecy/optima.hpp"
#include "secrecy/rates.hpp"
#include "secrecy/region.hpp"

namespace secrecy {

namespace {

struct Draw {
  ChannelParams channel;
  PowerConstraint power;
};

// Random channels with a > ac and peak powers spanning both sides of the
// max-min power threshold.
std::vector<Draw> draw_channels(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u_a(0.5, 2.0);
  std::uniform_real_distribution<double> u_ratio(0.05, 0.9);
  std::uniform_real_distribution<double> u_n(0.5, 2.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<Draw> draws;
  draws.reserve(n);
  for (int i = 0; i < n; ++i) {
    ChannelParams ch{};
    ch.a = u_a(rng);
    ch.ac = ch.a * u_ratio(rng);
    ch.N = u_n(rng);
    const double p_min = minimal_maxmin_power(ch);
    const double P = p_min * (0.5 + 3.5 * u01(rng));
    draws.push_back({ch, {P}});
  }
  return draws;
}

// Central finite difference of one user's raw rate along one coordinate.
double fd_component(const ChannelParams& ch, const Strategy& s, int user, int axis,
                    double h) {
  Strategy lo = s, hi = s;
  switch (axis) {
    case 0: lo.p1 -= h; hi.p1 += h; break;
    case 1: lo.p2 -= h; hi.p2 += h; break;
    case 2: lo.lambda1 -= h; hi.lambda1 += h; break;
    default: lo.lambda2 -= h; hi.lambda2 += h; break;
  }
  const RatePair rl = secrecy_rates(ch, lo);
  const RatePair rh = secrecy_rates(ch, hi);
  return user == 1 ? (rh.r1_raw - rl.r1_raw) / (2.0 * h)
                   : (rh.r2_raw - rl.r2_raw) / (2.0 * h);
}

VerifyCheck oracle_sweep_check(
    const std::string& name, const std::vector<Draw>& draws, const GridSpec& grid,
    double bound_cap,
    const std::function<double(const ChannelParams&, const PowerConstraint&)>& closed,
    const std::function<OracleResult(const ChannelParams&, const PowerConstraint&,
                                     const GridSpec&)>& oracle) {
  VerifyCheck check;
  check.name = name;
  check.pass = true;
  for (const Draw& d : draws) {
    VerifyCase c;
    c.channel = d.channel;
    c.power = d.power;
    c.closed_form = closed(d.channel, d.power);
    const OracleResult res = oracle(d.channel, d.power, grid);
    c.oracle = res.best_value;
    c.resolution_bound = res.resolution_bound;
    c.difference = c.closed_form - c.oracle;
    c.pass = std::abs(c.difference) <= c.resolution_bound &&
             c.resolution_bound <= bound_cap;
    check.max_abs_difference = std::max(check.max_abs_difference, std::abs(c.difference));
    check.pass = check.pass && c.pass;
    check.cases.push_back(c);
  }
  return check;
}

}  // namespace

VerifyHooks VerifyHooks::defaults() {
  VerifyHooks hooks;
  hooks.maxmin_value = [](const ChannelParams& ch, const PowerConstraint& pc) {
    return maxmin_point(ch, pc).r_min_star;
  };
  hooks.single_user_value = [](const ChannelParams& ch, const PowerConstraint& pc) {
    return single_user_point(ch, pc, 1).r_su_star;
  };
  hooks.critical_power_value = [](const ChannelParams& ch) {
    return critical_power(ch);
  };
  return hooks;
}

VerifyReport run_verification(const VerifyOptions& options, const VerifyHooks& hooks) {
  validate(options.grid);
  if (options.n_channels < 1)
    throw std::domain_error("verification needs at least one channel draw");
  std::mt19937_64 rng(options.seed);
  const std::vector<Draw> draws = draw_channels(options.n_channels, rng);

  VerifyReport report;

  // 1. Max-min closed form vs 4-D oracle.
  report.checks.push_back(oracle_sweep_check(
      "maxmin-vs-oracle", draws, options.grid, options.maxmin_bound_cap,
      hooks.maxmin_value,
      [](const ChannelParams& ch, const PowerConstraint& pc, const GridSpec& g) {
        return oracle_maxmin(ch, pc, g);
      }));

  // 2. Single-user closed form vs oracle, finer refinement.
  GridSpec su_grid = options.grid;
  su_grid.refine_rounds = std::max(su_grid.refine_rounds, options.single_user_refine_rounds);
  report.checks.push_back(oracle_sweep_check(
      "single-user-vs-oracle", draws, su_grid, options.single_user_bound_cap,
      hooks.single_user_value,
      [](const ChannelParams& ch, const PowerConstraint& pc, const GridSpec& g) {
        return oracle_single_user(ch, pc, 1, g);
      }));

  // 3. Critical power: r_su(P_c) must equal 2 r_min(P_c).
  {
    VerifyCheck check;
    check.name = "critical-power-identity";
    check.pass = true;
    for (const Draw& d : draws) {
      VerifyCase c;
      c.channel = d.channel;
      const double pc_power = hooks.critical_power_value(d.channel);
      c.power = {pc_power};
      if (pc_power > 0.0) {
        c.closed_form = hooks.single_user_value(d.channel, {pc_power});
        c.oracle = 2.0 * hooks.maxmin_value(d.channel, {pc_power});
        c.difference = c.closed_form - c.oracle;
        c.pass = std::abs(c.difference) <= 1e-9;
      }
      check.max_abs_difference =
          std::max(check.max_abs_difference, std::abs(c.difference));
      check.pass = check.pass && c.pass;
      check.cases.push_back(c);
    }
    report.checks.push_back(check);
  }

  // 4. Analytic gradients vs central finite differences on interior
  // points (relative to the gradient's largest component).
  {
    VerifyCheck check;
    check.name = "gradient-finite-difference";
    check.pass = true;
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(draws.size()) - 1);
    const int samples = 1000;
    for (int i = 0; i < samples; ++i) {
      const Draw& d = draws[pick(rng)];
      Strategy s;
      s.p1 = d.power.P * (0.05 + 0.9 * u01(rng));
      s.p2 = d.power.P * (0.05 + 0.9 * u01(rng));
      s.lambda1 = 0.05 + 0.9 * u01(rng);
      s.lambda2 = 0.05 + 0.9 * u01(rng);
      for (int user = 1; user <= 2; ++user) {
        const Eigen::Vector4d analytic = rate_gradient(d.channel, s, user).vec();
        Eigen::Vector4d fd;
        for (int axis = 0; axis < 4; ++axis) {
          const double scale = axis < 2 ? d.power.P : 1.0;
          fd[axis] = fd_component(d.channel, s, user, axis, 1e-6 * scale);
        }
        const double denom =
            std::max({analytic.cwiseAbs().maxCoeff(), fd.cwiseAbs().maxCoeff(), 1e-9});
        const double rel = (analytic - fd).cwiseAbs().maxCoeff() / denom;
        check.max_abs_difference = std::max(check.max_abs_difference, rel);
      }
    }
    check.pass = check.max_abs_difference <= 1e-5;
    report.checks.push_back(check);
  }

  // 5. The whole lambda* family achieves the same max-min rate, and the
  // symmetric rate is stationary there.
  {
    VerifyCheck check;
    check.name = "lambda-family-invariance";
    check.pass = true;
    double worst_grad = 0.0;
    for (const Draw& d : draws) {
      const MaxMinSolution sol = maxmin_point(d.channel, d.power);
      if (sol.power_limited) continue;
      const double hi = sol.lambda_star_interval.hi;
      for (int j = 0; j < 20; ++j) {
        const double lambda = hi * static_cast<double>(j) / 19.0;
        const double p = p_of_lambda(d.channel, lambda);
        const double rate = symmetric_rate(d.channel, p, lambda);
        check.max_abs_difference =
            std::max(check.max_abs_difference, std::abs(rate - sol.r_min_star));
        worst_grad = std::max(
            worst_grad, symmetric_rate_gradient(d.channel, p, lambda).norm());
      }
    }
    check.pass = check.max_abs_difference <= 1e-9 && worst_grad <= 1e-7;
    report.checks.push_back(check);
  }

  // 6. Perturbation products at interior max-min points are negative for
  // random nonzero directions.
  {
    VerifyCheck check;
    check.name = "perturbation-negativity";
    check.pass = true;
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = -std::numeric_limits<double>::infinity();
    int sampled = 0;
    for (const Draw& d : draws) {
      const MaxMinSolution sol = maxmin_point(d.channel, d.power);
      if (sol.power_limited || sol.lambda_star_interval.hi <= 1e-6) continue;
      const MaxMinSolution mid =
          maxmin_point(d.channel, d.power, 0.5 * sol.lambda_star_interval.hi);
      for (int j = 0; j < 100; ++j) {
        Eigen::Vector4d dir;
        do {
          for (int k = 0; k < 4; ++k) dir[k] = gauss(rng);
        } while (dir.norm() == 0.0);
        dir.normalize();
        worst = std::max(worst, perturbation_product(d.channel, mid.strategy(), dir));
        ++sampled;
      }
    }
    check.max_abs_difference = sampled > 0 ? worst : 0.0;
    check.pass = sampled == 0 || worst < 0.0;
    report.checks.push_back(check);
  }

  // 7. Artificial noise only enlarges the region (checked on equal grids
  // so the no-noise samples are a subset of the full ones).
  {
    VerifyCheck check;
    check.name = "region-dominance";
    check.pass = true;
    const ChannelParams base{1.0, 0.05, 1.0};
    for (const double ac : {0.01, 0.2, 0.5}) {
      VerifyCase c;
      c.channel = {base.a, ac, base.N};
      c.power = {100.0};
      const RegionEstimate on = sample_region(c.channel, c.power, options.grid, true);
      const RegionEstimate off = sample_region(c.channel, c.power, options.grid, false);
      int violations = 0;
      for (const Eigen::Vector2d& v : off.hull)
        if (!hull_contains(on, RatePair::from_clamped(v.x(), v.y()), 1e-6)) ++violations;
      const double on_r1 = axis_intercepts(c.channel, c.power, true).first.r1;
      const double off_r1 = axis_intercepts(c.channel, c.power, false).first.r1;
      c.closed_form = on_r1;
      c.oracle = off_r1;
      c.difference = static_cast<double>(violations);
      c.pass = violations == 0 && on_r1 > off_r1;
      check.max_abs_difference = std::max(check.max_abs_difference, c.difference);
      check.pass = check.pass && c.pass;
      check.cases.push_back(c);
    }
    report.checks.push_back(check);
  }

  // 8. Max-sum point diverges from the max-min point at large power.
  {
    VerifyCheck check;
    check.name = "max-sum-divergence";
    const ChannelParams ch{1.0, 0.05, 1.0};
    const PowerConstraint pc{100.0};
    const OracleResult res = oracle_max_sum(ch, pc, options.grid);
    VerifyCase c;
    c.channel = ch;
    c.power = pc;
    c.closed_form = 2.0 * hooks.maxmin_value(ch, pc);
    c.oracle = res.best_value;
    c.resolution_bound = res.resolution_bound;
    c.difference = c.oracle - c.closed_form;
    c.pass = c.difference > c.resolution_bound;
    check.cases.push_back(c);
    check.max_abs_difference = c.difference;
    check.pass = c.pass;
    report.checks.push_back(check);
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const VerifyCheck& c) { return c.pass; });
  return report;
}

}  // namespace secrecy
