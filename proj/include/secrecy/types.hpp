#pragma once

#include <algorithm>
#include <string>

#include <Eigen/Dense>

namespace secrecy {

/// Fixed environment of the two-user symmetric Gaussian interference
/// channel. All gains and powers are linear scale (no dB anywhere in the
/// core; unit conversion is a front-end concern).
struct ChannelParams {
  double a;   ///< direct-channel power gain
  double ac;  ///< cross-channel power gain
  double N;   ///< noise variance, in the same units as transmit power
};

/// Peak transmit power available to each user.
struct PowerConstraint {
  double P;
};

/// One operating point: per-user transmit powers and the fractions of
/// that power spent on artificial noise.
struct Strategy {
  double p1 = 0.0;
  double p2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Secrecy-rate pair in bits per channel use. The raw bounds may be
/// negative (a negative bound means no secret communication is possible
/// at that operating point); the clamped fields satisfy r = max(0, r_raw).
struct RatePair {
  double r1_raw = 0.0;
  double r2_raw = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;

  static RatePair from_raw(double r1_raw, double r2_raw) {
    return {r1_raw, r2_raw, std::max(0.0, r1_raw), std::max(0.0, r2_raw)};
  }
  /// For synthetic nonnegative points (e.g. time-shared rates) whose raw
  /// bounds are not defined by a single strategy.
  static RatePair from_clamped(double r1, double r2) { return {r1, r2, r1, r2}; }

  Eigen::Vector2d clamped() const { return {r1, r2}; }
};

/// Partial derivatives of one user's raw secrecy rate with respect to the
/// four strategy coordinates, in bits per channel use per coordinate unit.
struct RateGradient {
  double d_p1 = 0.0;
  double d_p2 = 0.0;
  double d_lambda1 = 0.0;
  double d_lambda2 = 0.0;

  Eigen::Vector4d vec() const { return {d_p1, d_p2, d_lambda1, d_lambda2}; }
};

enum class OperatingPointLabel { max_min, single_user_1, single_user_2, max_sum };

std::string to_string(OperatingPointLabel label);

/// A labelled strategy together with the rate pair it achieves.
struct OperatingPoint {
  OperatingPointLabel label;
  Strategy strategy;
  RatePair rates;
};

// ---- input validation -------------------------------------------------

void validate(const ChannelParams& ch);
void validate(const PowerConstraint& pc);
void validate(const Strategy& s);
void validate(const Strategy& s, const PowerConstraint& pc);

/// True when the channel supports any positive secrecy rate (a > ac).
inline bool has_positive_secrecy(const ChannelParams& ch) { return ch.a > ch.ac; }

/// Throws std::domain_error with a caller-facing message unless a > ac.
void require_positive_secrecy(const ChannelParams& ch);

}  // namespace secrecy
