#include "secrecy/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "grid_detail.hpp"
#include "secrecy/optima.hpp"
#include "secrecy/rates.hpp"

namespace secrecy {

namespace {

using detail::Grid4;
using Eigen::Vector2d;

constexpr double kCollinearTol = 1e-12;

double cross(const Vector2d& o, const Vector2d& a, const Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Counterclockwise convex hull by monotone chain; collinear points are
// dropped under a fixed tolerance. Degenerate inputs (all points on one
// segment) yield the deduplicated sorted chain.
std::vector<Vector2d> convex_hull(std::vector<Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vector2d& x, const Vector2d& y) {
    return x.x() != y.x() ? x.x() < y.x() : x.y() < y.y();
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vector2d& x, const Vector2d& y) { return x == y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;

  std::vector<Vector2d> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kCollinearTol) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kCollinearTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

double point_segment_distance(const Vector2d& p, const Vector2d& a, const Vector2d& b) {
  const Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

// Indices of the Pareto-maximal points under clamped coordinates:
// sort by (r1 desc, r2 desc, index asc), keep strict running-max of r2.
std::vector<std::size_t> pareto_indices(const std::vector<RatePair>& rates) {
  std::vector<std::size_t> order(rates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (rates[x].r1 != rates[y].r1) return rates[x].r1 > rates[y].r1;
    if (rates[x].r2 != rates[y].r2) return rates[x].r2 > rates[y].r2;
    return x < y;
  });
  std::vector<std::size_t> keep;
  double best_r2 = -std::numeric_limits<double>::infinity();
  for (const std::size_t idx : order) {
    if (rates[idx].r2 > best_r2) {
      keep.push_back(idx);
      best_r2 = rates[idx].r2;
    }
  }
  return keep;  // r1 descending
}

}  // namespace

std::pair<RatePair, RatePair> axis_intercepts(const ChannelParams& ch,
                                              const PowerConstraint& pc,
                                              bool allow_artificial_noise) {
  validate(ch);
  validate(pc);
  if (!has_positive_secrecy(ch))  // degenerate channel: only (0,0) achievable
    return {RatePair::from_clamped(0.0, 0.0), RatePair::from_clamped(0.0, 0.0)};
  if (allow_artificial_noise) {
    const double r_su = single_user_point(ch, pc, 1).r_su_star;
    return {RatePair::from_clamped(r_su, 0.0), RatePair::from_clamped(0.0, r_su)};
  }
  // Without artificial noise the best either user can do is transmit at
  // peak power while the other stays silent.
  const double r =
      std::max(0.0, std::log2((ch.N + ch.a * pc.P) / (ch.N + ch.ac * pc.P)));
  return {RatePair::from_clamped(r, 0.0), RatePair::from_clamped(0.0, r)};
}

std::vector<RatePair> pareto_filter(const std::vector<RatePair>& points) {
  const std::vector<std::size_t> keep = pareto_indices(points);
  std::vector<RatePair> out;
  out.reserve(keep.size());
  for (auto it = keep.rbegin(); it != keep.rend(); ++it) out.push_back(points[*it]);
  return out;  // r1 ascending
}

RegionEstimate sample_region(const ChannelParams& ch, const PowerConstraint& pc,
                             const GridSpec& grid, bool allow_artificial_noise) {
  validate(ch);
  validate(pc);
  validate(grid);

  Grid4 g{{0.0, pc.P, grid.n_power},
          {0.0, pc.P, grid.n_power},
          {0.0, 1.0, allow_artificial_noise ? grid.n_lambda : 1},
          {0.0, 1.0, allow_artificial_noise ? grid.n_lambda : 1}};

  const std::size_t total = g.size();
  std::vector<RatePair> rates(total);
  detail::parallel_blocks(total, thread_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      rates[k] = secrecy_rates(ch, g.decode(k));
  });

  RegionEstimate region;
  region.with_artificial_noise = allow_artificial_noise;
  region.channel = ch;
  region.power = pc;
  region.grid = grid;

  const std::vector<std::size_t> keep = pareto_indices(rates);
  region.frontier.reserve(keep.size());
  for (auto it = keep.rbegin(); it != keep.rend(); ++it)  // r1 ascending
    region.frontier.push_back({g.decode(*it), rates[*it]});

  const auto [ix, iy] = axis_intercepts(ch, pc, allow_artificial_noise);
  std::vector<Vector2d> pts;
  pts.reserve(region.frontier.size() + 3);
  pts.emplace_back(0.0, 0.0);
  pts.push_back(ix.clamped());
  pts.push_back(iy.clamped());
  for (const FrontierSample& f : region.frontier) pts.push_back(f.rates.clamped());
  region.hull = convex_hull(std::move(pts));

  // Rotate so the hull starts at the origin (it is always a hull point:
  // nothing achievable has a negative coordinate).
  const auto at_origin = std::find_if(region.hull.begin(), region.hull.end(),
                                      [](const Vector2d& v) { return v.x() == 0.0 && v.y() == 0.0; });
  if (at_origin != region.hull.end())
    std::rotate(region.hull.begin(), at_origin, region.hull.end());
  return region;
}

RatePair timeshare(const RatePair& point_a, const RatePair& point_b, double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw std::domain_error("time-share fraction must lie in [0, 1]");
  // Interpolates from point_a (fraction 0) to point_b (fraction 1). The
  // combination is taken on the clamped coordinates: a time-shared point
  // has no single generating strategy, so no separate raw value exists.
  const double r1 = (1.0 - fraction) * point_a.r1 + fraction * point_b.r1;
  const double r2 = (1.0 - fraction) * point_a.r2 + fraction * point_b.r2;
  return RatePair::from_clamped(r1, r2);
}

bool hull_contains(const RegionEstimate& region, const RatePair& point, double tol) {
  const std::vector<Vector2d>& hull = region.hull;
  if (hull.empty()) return false;
  const Vector2d p = point.clamped();

  if (hull.size() >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < hull.size() && inside; ++i) {
      const Vector2d& a = hull[i];
      const Vector2d& b = hull[(i + 1) % hull.size()];
      if (cross(a, b, p) < 0.0) inside = false;  // right of a CCW edge
    }
    if (inside) return true;
  }

  double dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vector2d& a = hull[i];
    const Vector2d& b = hull[(i + 1) % hull.size()];
    dist = std::min(dist, point_segment_distance(p, a, b));
  }
  return dist <= tol;
}

}  // namespace secrecy
