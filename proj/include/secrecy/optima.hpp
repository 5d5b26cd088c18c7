#pragma once

#include <optional>
#include <string>

#include "secrecy/types.hpp"

namespace secrecy {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
  double width() const { return hi - lo; }
};

/// Closed-form solution of the symmetric max-min problem.
///
/// Above the power threshold p_min_star the optimum is a one-parameter
/// family: any lambda in lambda_star_interval together with the power
/// p_of_lambda(lambda) achieves r_min_star. Below the threshold the peak
/// power binds (power_limited): lambda = 0, p = P.
struct MaxMinSolution {
  double r_min_star = 0.0;          ///< optimal min(R1, R2)
  Interval lambda_star_interval{};  ///< admissible lambda* range
  double chosen_lambda = 0.0;       ///< representative lambda (default 0)
  double p_star = 0.0;              ///< power paired with chosen_lambda
  bool power_limited = false;       ///< true when P < p_min_star
  double p_min_star = 0.0;          ///< smallest power achieving r_min_star

  Strategy strategy() const { return {p_star, p_star, chosen_lambda, chosen_lambda}; }
};

/// Closed-form single-user optimum: one user transmits at peak power with
/// no artificial noise while the other spends everything on jamming.
struct SingleUserSolution {
  int user = 1;  ///< which user communicates (1 or 2)
  double r_su_star = 0.0;
  Strategy strategy{};
  double delta = 0.0;  ///< sqrt(N^2 + (a+ac) N P)
};

enum class OperatingMode { max_min, time_sharing, tie };

std::string to_string(OperatingMode mode);

/// Per-user rate comparison of the max-min point against equal
/// time-sharing of the two single-user points.
struct ModeComparison {
  OperatingMode mode = OperatingMode::tie;
  double rate_max_min = 0.0;     ///< r_min_star
  double rate_time_share = 0.0;  ///< r_su_star / 2
  double difference = 0.0;       ///< rate_time_share - rate_max_min
};

/// Per-user rates within this tolerance of each other count as a tie.
inline constexpr double kModeTieTolerance = 1e-9;

/// Smallest symmetric power that achieves r_min_star (independent of P).
double minimal_maxmin_power(const ChannelParams& ch);

/// The symmetric power paired with lambda on the optimal ridge:
/// p = N(a-ac) / ((a+ac)(ac - a lambda)). Requires lambda < ac/a.
double p_of_lambda(const ChannelParams& ch, double lambda);

/// Max-min solution. If lambda_choice is given it must lie in the
/// admissible interval (domain error otherwise); default is lambda* = 0,
/// the minimum-power representative.
MaxMinSolution maxmin_point(const ChannelParams& ch, const PowerConstraint& pc,
                            std::optional<double> lambda_choice = std::nullopt);

SingleUserSolution single_user_point(const ChannelParams& ch, const PowerConstraint& pc,
                                     int user = 1);

/// Peak power at which equal time-sharing of the single-user points
/// matches the max-min rate exactly.
double critical_power(const ChannelParams& ch);

ModeComparison compare_operating_modes(const ChannelParams& ch, const PowerConstraint& pc,
                                       double tie_tolerance = kModeTieTolerance);

}  // namespace secrecy
