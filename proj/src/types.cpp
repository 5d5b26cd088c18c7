#include "secrecy/types.hpp"

#include <stdexcept>
#include <string>

namespace secrecy {

std::string to_string(OperatingPointLabel label) {
  switch (label) {
    case OperatingPointLabel::max_min: return "max-min";
    case OperatingPointLabel::single_user_1: return "single-user-1";
    case OperatingPointLabel::single_user_2: return "single-user-2";
    case OperatingPointLabel::max_sum: return "max-sum";
  }
  return "unknown";
}

void validate(const ChannelParams& ch) {
  if (!(ch.a > 0.0)) throw std::domain_error("direct gain a must be positive");
  if (!(ch.ac > 0.0)) throw std::domain_error("cross gain ac must be positive");
  if (!(ch.N > 0.0)) throw std::domain_error("noise power N must be positive");
}

void validate(const PowerConstraint& pc) {
  if (!(pc.P >= 0.0)) throw std::domain_error("peak power P must be nonnegative");
}

void validate(const Strategy& s) {
  if (!(s.p1 >= 0.0) || !(s.p2 >= 0.0))
    throw std::domain_error("transmit powers must be nonnegative");
  if (!(s.lambda1 >= 0.0 && s.lambda1 <= 1.0) ||
      !(s.lambda2 >= 0.0 && s.lambda2 <= 1.0))
    throw std::domain_error("noise fractions must lie in [0, 1]");
}

void validate(const Strategy& s, const PowerConstraint& pc) {
  validate(s);
  if (s.p1 > pc.P || s.p2 > pc.P)
    throw std::domain_error("transmit power exceeds the peak power constraint");
}

void require_positive_secrecy(const ChannelParams& ch) {
  validate(ch);
  if (!has_positive_secrecy(ch))
    throw std::domain_error(
        "direct gain must exceed cross gain (a > ac) for positive secrecy rates");
}

}  // namespace secrecy
