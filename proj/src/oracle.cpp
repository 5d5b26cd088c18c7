#include "secrecy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "grid_detail.hpp"
#include "secrecy/rates.hpp"

namespace secrecy {

namespace {

using detail::Axis;
using detail::Grid4;

// Shrink an axis around `center` by `zoom`, staying inside the original
// domain. Clipping at a domain wall loses the overhang, which only
// tightens the search box.
Axis zoom_axis(const Axis& axis, double center, double zoom, double domain_lo,
               double domain_hi) {
  const double half = 0.5 * axis.width() * zoom;
  return {std::max(domain_lo, center - half), std::min(domain_hi, center + half),
          axis.n};
}

// Evaluate the objective at every grid node into `values` (deterministic
// for any worker count; see parallel_blocks).
void fill_values(const ChannelParams& ch, const Objective& objective, const Grid4& grid,
                 std::vector<double>& values) {
  const std::size_t total = grid.size();
  values.resize(total);
  detail::parallel_blocks(total, thread_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      values[k] = objective(ch, grid.decode(k));
  });
}

// Largest value wins; exact ties go to the lexicographically smallest
// strategy. Scanning flat indices in order realises that tie-break with
// a plain strict comparison.
std::size_t argmax_index(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] > values[best]) best = k;
  return best;
}

// Half the summed worst-case adjacent-node jump per axis: a sampled
// Lipschitz-style estimate of how far the optimum value can sit from the
// best node of this grid.
double resolution_bound(const Grid4& grid, const std::vector<double>& values) {
  const std::size_t s_l2 = 1;
  const std::size_t s_l1 = static_cast<std::size_t>(grid.l2.n);
  const std::size_t s_p2 = s_l1 * grid.l1.n;
  const std::size_t s_p1 = s_p2 * grid.p2.n;

  double d_p1 = 0.0, d_p2 = 0.0, d_l1 = 0.0, d_l2 = 0.0;
  const std::size_t total = grid.size();
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rem = k;
    const int j2 = static_cast<int>(rem % grid.l2.n);
    rem /= grid.l2.n;
    const int j1 = static_cast<int>(rem % grid.l1.n);
    rem /= grid.l1.n;
    const int i2 = static_cast<int>(rem % grid.p2.n);
    const int i1 = static_cast<int>(rem / grid.p2.n);
    const double v = values[k];
    if (i1 + 1 < grid.p1.n) d_p1 = std::max(d_p1, std::abs(values[k + s_p1] - v));
    if (i2 + 1 < grid.p2.n) d_p2 = std::max(d_p2, std::abs(values[k + s_p2] - v));
    if (j1 + 1 < grid.l1.n) d_l1 = std::max(d_l1, std::abs(values[k + s_l1] - v));
    if (j2 + 1 < grid.l2.n) d_l2 = std::max(d_l2, std::abs(values[k + s_l2] - v));
  }
  return 0.5 * (d_p1 + d_p2 + d_l1 + d_l2);
}

}  // namespace

void validate(const GridSpec& grid) {
  if (grid.n_power < 2) throw std::domain_error("n_power must be at least 2");
  if (grid.n_lambda < 2) throw std::domain_error("n_lambda must be at least 2");
  if (grid.refine_rounds < 0) throw std::domain_error("refine_rounds must be >= 0");
  if (!(grid.zoom_factor > 0.0 && grid.zoom_factor < 1.0))
    throw std::domain_error("zoom_factor must lie in (0, 1)");
}

Objective min_rate_objective() {
  return [](const ChannelParams& ch, const Strategy& s) {
    const RatePair r = secrecy_rates(ch, s);
    return std::min(r.r1_raw, r.r2_raw);
  };
}

Objective user_rate_objective(int user) {
  if (user != 1 && user != 2) throw std::domain_error("user must be 1 or 2");
  return [user](const ChannelParams& ch, const Strategy& s) {
    const RatePair r = secrecy_rates(ch, s);
    return user == 1 ? r.r1_raw : r.r2_raw;
  };
}

Objective sum_rate_objective() {
  return [](const ChannelParams& ch, const Strategy& s) {
    const RatePair r = secrecy_rates(ch, s);
    return r.r1 + r.r2;
  };
}

OracleResult grid_search(const ChannelParams& ch, const PowerConstraint& pc,
                         const Objective& objective, const GridSpec& grid) {
  validate(ch);
  validate(pc);
  validate(grid);

  Grid4 g{{0.0, pc.P, grid.n_power},
          {0.0, pc.P, grid.n_power},
          {0.0, 1.0, grid.n_lambda},
          {0.0, 1.0, grid.n_lambda}};

  OracleResult result;
  result.best_value = -std::numeric_limits<double>::infinity();

  std::vector<double> values;
  for (int round = 0; round <= grid.refine_rounds; ++round) {
    fill_values(ch, objective, g, values);
    const std::size_t best = argmax_index(values);
    const Strategy s = g.decode(best);
    // The incumbent carries over between rounds, so the reported value
    // never degrades as rounds are added.
    if (values[best] > result.best_value ||
        (values[best] == result.best_value && detail::lex_less(s, result.best_strategy))) {
      result.best_value = values[best];
      result.best_strategy = s;
    }
    if (round == grid.refine_rounds) break;
    const double z = grid.zoom_factor;
    g.p1 = zoom_axis(g.p1, result.best_strategy.p1, z, 0.0, pc.P);
    g.p2 = zoom_axis(g.p2, result.best_strategy.p2, z, 0.0, pc.P);
    g.l1 = zoom_axis(g.l1, result.best_strategy.lambda1, z, 0.0, 1.0);
    g.l2 = zoom_axis(g.l2, result.best_strategy.lambda2, z, 0.0, 1.0);
  }
  // The bound is sampled on the last (finest) grid actually evaluated.
  result.resolution_bound = resolution_bound(g, values);
  return result;
}

OracleResult oracle_maxmin(const ChannelParams& ch, const PowerConstraint& pc,
                           const GridSpec& grid) {
  return grid_search(ch, pc, min_rate_objective(), grid);
}

OracleResult oracle_single_user(const ChannelParams& ch, const PowerConstraint& pc,
                                int user, const GridSpec& grid) {
  return grid_search(ch, pc, user_rate_objective(user), grid);
}

OracleResult oracle_max_sum(const ChannelParams& ch, const PowerConstraint& pc,
                            const GridSpec& grid) {
  return grid_search(ch, pc, sum_rate_objective(), grid);
}

std::size_t thread_count() {
  if (const char* env = std::getenv("SECRECY_REGION_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace secrecy
