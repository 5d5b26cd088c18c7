#include "secrecy/optima.hpp"

#include <cmath>
#include <stdexcept>

#include "secrecy/rates.hpp"

namespace secrecy {

std::string to_string(OperatingMode mode) {
  switch (mode) {
    case OperatingMode::max_min: return "max-min";
    case OperatingMode::time_sharing: return "time-sharing";
    case OperatingMode::tie: return "tie";
  }
  return "unknown";
}

double minimal_maxmin_power(const ChannelParams& ch) {
  require_positive_secrecy(ch);
  // p(lambda) grows with lambda, so the cheapest member of the optimal
  // family is lambda = 0.
  return ch.N * (ch.a - ch.ac) / (ch.ac * (ch.a + ch.ac));
}

double p_of_lambda(const ChannelParams& ch, double lambda) {
  require_positive_secrecy(ch);
  const double margin = ch.ac - ch.a * lambda;
  if (!(margin > 0.0))
    throw std::domain_error("lambda must be below ac/a (stationary power diverges)");
  return ch.N * (ch.a - ch.ac) / ((ch.a + ch.ac) * margin);
}

MaxMinSolution maxmin_point(const ChannelParams& ch, const PowerConstraint& pc,
                            std::optional<double> lambda_choice) {
  require_positive_secrecy(ch);
  validate(pc);

  MaxMinSolution sol;
  sol.p_min_star = minimal_maxmin_power(ch);

  if (pc.P < sol.p_min_star) {
    // Not enough power to reach the stationary family: the rate is still
    // increasing at p = P, so spend the whole budget on the signal.
    sol.power_limited = true;
    sol.lambda_star_interval = {0.0, 0.0};
    if (lambda_choice && *lambda_choice != 0.0)
      throw std::domain_error("lambda_choice must be 0 in the power-limited regime");
    sol.chosen_lambda = 0.0;
    sol.p_star = pc.P;
    sol.r_min_star = symmetric_rate(ch, pc.P, 0.0);
    return sol;
  }

  const double sum = ch.a + ch.ac;
  sol.r_min_star = std::log2(sum * sum / (4.0 * ch.a * ch.ac));
  // The admissible lambda* range ends where the paired power hits P.
  const double lambda_max = ch.ac / ch.a - ch.N * (ch.a - ch.ac) / (pc.P * ch.a * sum);
  sol.lambda_star_interval = {0.0, lambda_max};
  if (lambda_choice && !sol.lambda_star_interval.contains(*lambda_choice))
    throw std::domain_error("lambda_choice outside the admissible lambda* interval");
  sol.chosen_lambda = lambda_choice.value_or(0.0);
  sol.p_star = p_of_lambda(ch, sol.chosen_lambda);
  return sol;
}

SingleUserSolution single_user_point(const ChannelParams& ch, const PowerConstraint& pc,
                                     int user) {
  require_positive_secrecy(ch);
  validate(pc);
  if (user != 1 && user != 2) throw std::domain_error("user must be 1 or 2");

  SingleUserSolution sol;
  sol.user = user;
  sol.delta = std::sqrt(ch.N * ch.N + (ch.a + ch.ac) * ch.N * pc.P);
  // The communicating user sends at peak power with no artificial noise;
  // the helper jams with all of its (interior-optimal) power.
  const double helper_power = (sol.delta - ch.N) / (ch.a + ch.ac);
  if (user == 1) {
    sol.strategy = {pc.P, helper_power, 0.0, 1.0};
  } else {
    sol.strategy = {helper_power, pc.P, 1.0, 0.0};
  }
  const double u = ch.a * ch.N + ch.ac * sol.delta;
  const double v = ch.ac * ch.N + ch.a * sol.delta;
  sol.r_su_star =
      std::log2((u * v + ch.a * (ch.a + ch.ac) * v * pc.P) /
                (u * v + ch.ac * (ch.a + ch.ac) * u * pc.P));
  return sol;
}

double critical_power(const ChannelParams& ch) {
  require_positive_secrecy(ch);
  const double num = ch.a * ch.a + ch.ac * ch.ac + 6.0 * ch.a * ch.ac;
  const double den = ch.ac * ch.ac + 3.0 * ch.a * ch.ac;
  return ch.N * (ch.a - ch.ac) * num / (den * den);
}

ModeComparison compare_operating_modes(const ChannelParams& ch, const PowerConstraint& pc,
                                       double tie_tolerance) {
  const MaxMinSolution mm = maxmin_point(ch, pc);
  const SingleUserSolution su = single_user_point(ch, pc, 1);

  ModeComparison cmp;
  cmp.rate_max_min = mm.r_min_star;
  cmp.rate_time_share = 0.5 * su.r_su_star;
  cmp.difference = cmp.rate_time_share - cmp.rate_max_min;
  if (std::abs(cmp.difference) <= tie_tolerance) {
    cmp.mode = OperatingMode::tie;
  } else if (cmp.difference > 0.0) {
    cmp.mode = OperatingMode::time_sharing;
  } else {
    cmp.mode = OperatingMode::max_min;
  }
  return cmp;
}

}  // namespace secrecy
