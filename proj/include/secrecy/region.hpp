#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "secrecy/oracle.hpp"
#include "secrecy/types.hpp"

namespace secrecy {

/// One Pareto-frontier sample: a strategy and the rate pair it achieves.
struct FrontierSample {
  Strategy strategy{};
  RatePair rates{};
};

/// Sampled achievable secrecy-rate region.
///
/// `frontier` holds the Pareto-maximal grid samples sorted by r1
/// ascending; `hull` is the convex hull of the frontier, the two exact
/// axis intercepts, and the origin — the region achievable with time
/// sharing — ordered counterclockwise starting at the origin.
struct RegionEstimate {
  std::vector<FrontierSample> frontier;
  std::vector<Eigen::Vector2d> hull;
  bool with_artificial_noise = true;
  ChannelParams channel{};
  PowerConstraint power{};
  GridSpec grid{};
};

/// Sample the achievable region on a strategy grid and reduce it to the
/// Pareto frontier plus its time-sharing hull. With
/// allow_artificial_noise == false the lambda axes are pinned to zero.
RegionEstimate sample_region(const ChannelParams& ch, const PowerConstraint& pc,
                             const GridSpec& grid = {},
                             bool allow_artificial_noise = true);

/// Exact axis intercepts (max r1 point, max r2 point), bypassing the
/// grid: single-user points when artificial noise is allowed, peak-power
/// pure-signal transmission otherwise.
std::pair<RatePair, RatePair> axis_intercepts(const ChannelParams& ch,
                                              const PowerConstraint& pc,
                                              bool allow_artificial_noise);

/// Pareto-maximal subset of `points` (clamped coordinates; dominated and
/// duplicate points removed), sorted by r1 ascending. Deterministic.
std::vector<RatePair> pareto_filter(const std::vector<RatePair>& points);

/// Rate pair achieved by time sharing: fraction of time on `point_a`,
/// the rest on `point_b`. fraction outside [0, 1] is a domain error.
RatePair timeshare(const RatePair& point_a, const RatePair& point_b, double fraction);

/// True when `point` lies inside the hull polygon or within Euclidean
/// distance tol of it.
bool hull_contains(const RegionEstimate& region, const RatePair& point,
                   double tol = 1e-9);

}  // namespace secrecy
