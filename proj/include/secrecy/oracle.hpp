#pragma once

#include <cstddef>
#include <functional>

#include "secrecy/types.hpp"

namespace secrecy {

/// Grid resolution for the brute-force search. Powers use n_power points
/// per axis on [0, P]; noise fractions use n_lambda points on [0, 1].
/// Each refinement round re-grids a box around the incumbent whose width
/// per axis is zoom_factor times the previous (clipped) width.
struct GridSpec {
  int n_power = 25;
  int n_lambda = 25;
  int refine_rounds = 4;
  double zoom_factor = 0.2;
};

/// Scalar objective over strategies, e.g. min-rate or one user's rate.
using Objective = std::function<double(const ChannelParams&, const Strategy&)>;

/// Outcome of a grid search: the best grid point found and an upper bound
/// on how much the reported value can move under one more grid step.
struct OracleResult {
  Strategy best_strategy{};
  double best_value = 0.0;
  /// Half the summed worst-case adjacent-value jump across the final
  /// round's axes: a conservative estimate of the grid-resolution error.
  double resolution_bound = 0.0;
};

void validate(const GridSpec& grid);

Objective min_rate_objective();
Objective user_rate_objective(int user);
Objective sum_rate_objective();

/// Exhaustive grid search with refinement. Deterministic: ties on the
/// objective value break towards the lexicographically smallest
/// (p1, p2, lambda1, lambda2), and the result does not depend on the
/// number of worker threads (see thread_count()).
OracleResult grid_search(const ChannelParams& ch, const PowerConstraint& pc,
                         const Objective& objective, const GridSpec& grid = {});

/// Convenience wrappers for the three standard objectives.
OracleResult oracle_maxmin(const ChannelParams& ch, const PowerConstraint& pc,
                           const GridSpec& grid = {});
OracleResult oracle_single_user(const ChannelParams& ch, const PowerConstraint& pc,
                                int user = 1, const GridSpec& grid = {});
OracleResult oracle_max_sum(const ChannelParams& ch, const PowerConstraint& pc,
                            const GridSpec& grid = {});

/// Worker count used by grid_search: SECRECY_REGION_THREADS if set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
std::size_t thread_count();

}  // namespace secrecy
