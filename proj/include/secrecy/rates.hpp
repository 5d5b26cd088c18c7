#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "secrecy/types.hpp"

namespace secrecy {

// The raw secrecy-rate bounds have the form
//
//   R1 = log2(A1/B1) - log2(C1/D1),  A1 = N + a p1 + ac p2
//                                    B1 = N + a l1 p1 + ac p2
//                                    C1 = N + ac p1 + a l2 p2
//                                    D1 = N + ac l1 p1 + a l2 p2
//
// and symmetrically for user 2 (swap the roles of the users). The first
// log is user 1's rate towards its own receiver with the artificial-noise
// fraction l1 subtracted; the second is what receiver 2 can decode of
// user 1's signal. Grouping as log2(A*D/(B*C)) costs two logs per rate
// pair instead of four because B2 == C1 and B1 == C2.

/// Both users' raw and clamped secrecy rates at one strategy.
inline RatePair secrecy_rates(const ChannelParams& ch, const Strategy& s) {
  validate(s);
  const double A1 = ch.N + ch.a * s.p1 + ch.ac * s.p2;
  const double B1 = ch.N + ch.a * s.lambda1 * s.p1 + ch.ac * s.p2;
  const double C1 = ch.N + ch.ac * s.p1 + ch.a * s.lambda2 * s.p2;
  const double D1 = ch.N + ch.ac * s.lambda1 * s.p1 + ch.a * s.lambda2 * s.p2;
  const double A2 = ch.N + ch.a * s.p2 + ch.ac * s.p1;
  const double D2 = ch.N + ch.ac * s.lambda2 * s.p2 + ch.a * s.lambda1 * s.p1;
  // B2 == C1 and C2 == B1, so both ratios share the denominator B1*C1.
  const double r1_raw = std::log2(A1 * D1 / (B1 * C1));
  const double r2_raw = std::log2(A2 * D2 / (C1 * B1));
  return RatePair::from_raw(r1_raw, r2_raw);
}

/// Analytic gradient of user 1's raw rate. Derivatives of
/// ln(A*D/(B*C)) are sums of reciprocals; divide by ln 2 for bits.
inline RateGradient rate1_gradient(const ChannelParams& ch, const Strategy& s) {
  const double A = ch.N + ch.a * s.p1 + ch.ac * s.p2;
  const double B = ch.N + ch.a * s.lambda1 * s.p1 + ch.ac * s.p2;
  const double C = ch.N + ch.ac * s.p1 + ch.a * s.lambda2 * s.p2;
  const double D = ch.N + ch.ac * s.lambda1 * s.p1 + ch.a * s.lambda2 * s.p2;
  const double inv_ln2 = 1.0 / std::numbers::ln2;
  RateGradient g;
  g.d_p1 = (ch.a / A - ch.a * s.lambda1 / B - ch.ac / C + ch.ac * s.lambda1 / D) * inv_ln2;
  g.d_p2 = (ch.ac / A - ch.ac / B - ch.a * s.lambda2 / C + ch.a * s.lambda2 / D) * inv_ln2;
  g.d_lambda1 = s.p1 * (-ch.a / B + ch.ac / D) * inv_ln2;
  g.d_lambda2 = ch.a * s.p2 * (1.0 / D - 1.0 / C) * inv_ln2;
  return g;
}

/// Analytic gradient of user 2's raw rate, by the user-swap symmetry.
inline RateGradient rate2_gradient(const ChannelParams& ch, const Strategy& s) {
  const Strategy sw{s.p2, s.p1, s.lambda2, s.lambda1};
  const RateGradient g = rate1_gradient(ch, sw);
  return {g.d_p2, g.d_p1, g.d_lambda2, g.d_lambda1};
}

/// Gradient of the chosen user's raw rate. The interior formula is used
/// as-is on the boundary (one-sided interpretation).
inline RateGradient rate_gradient(const ChannelParams& ch, const Strategy& s,
                                  int which_user) {
  if (which_user == 1) return rate1_gradient(ch, s);
  if (which_user == 2) return rate2_gradient(ch, s);
  throw std::domain_error("which_user must be 1 or 2");
}

// ---- symmetric slice ---------------------------------------------------
// On the symmetric slice p1 = p2 = p, l1 = l2 = l both users achieve the
// same raw rate, which reduces to
//   R^s = log2[(N + (a+ac) p)(N + (a+ac) l p)] - 2 log2(N + ac p + a l p).

inline double symmetric_rate(const ChannelParams& ch, double p, double lambda) {
  if (!(p >= 0.0)) throw std::domain_error("power must be nonnegative");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::domain_error("noise fraction must lie in [0, 1]");
  const double sum = ch.a + ch.ac;
  const double num = (ch.N + sum * p) * (ch.N + sum * lambda * p);
  const double den = ch.N + ch.ac * p + ch.a * lambda * p;
  return std::log2(num) - 2.0 * std::log2(den);
}

/// d/dp and d/dlambda of symmetric_rate, packed as (d_p, d_lambda).
inline Eigen::Vector2d symmetric_rate_gradient(const ChannelParams& ch, double p,
                                               double lambda) {
  const double sum = ch.a + ch.ac;
  const double den = ch.N + ch.ac * p + ch.a * lambda * p;
  const double inv_ln2 = 1.0 / std::numbers::ln2;
  const double d_p = (sum / (ch.N + sum * p) + sum * lambda / (ch.N + sum * lambda * p) -
                      2.0 * (ch.ac + ch.a * lambda) / den) *
                     inv_ln2;
  const double d_lambda =
      (sum * p / (ch.N + sum * lambda * p) - 2.0 * ch.a * p / den) * inv_ln2;
  return {d_p, d_lambda};
}

/// Directional differential product (grad R1 . d) * (grad R2 . d) for a
/// joint strategy perturbation d. Negative at a point means the
/// perturbation helps one user only at the other's expense.
inline double perturbation_product(const ChannelParams& ch, const Strategy& s,
                                   const Eigen::Vector4d& direction) {
  if (direction.isZero(0.0)) throw std::domain_error("direction must be nonzero");
  const double g1 = rate1_gradient(ch, s).vec().dot(direction);
  const double g2 = rate2_gradient(ch, s).vec().dot(direction);
  return g1 * g2;
}

}  // namespace secrecy
