#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "secrecy/oracle.hpp"
#include "secrecy/types.hpp"

namespace secrecy {

/// Injection points for the closed forms under test. Defaults call the
/// library implementations; tests substitute deliberately wrong formulas
/// to confirm the checks actually discriminate.
struct VerifyHooks {
  std::function<double(const ChannelParams&, const PowerConstraint&)> maxmin_value;
  std::function<double(const ChannelParams&, const PowerConstraint&)> single_user_value;
  std::function<double(const ChannelParams&)> critical_power_value;

  static VerifyHooks defaults();
};

struct VerifyOptions {
  int n_channels = 50;        ///< random channel draws for the oracle sweeps
  std::uint64_t seed = 2024;  ///< RNG seed for all randomized checks
  GridSpec grid{};            ///< max-min oracle grid
  /// The single-user corner is sharp, so its oracle runs extra rounds.
  int single_user_refine_rounds = 6;
  double maxmin_bound_cap = 1e-3;       ///< required oracle resolution, max-min
  double single_user_bound_cap = 1e-4;  ///< required oracle resolution, single-user
};

/// One comparison inside a check. For oracle sweeps all fields are
/// meaningful; property checks fill channel/power and `difference`.
struct VerifyCase {
  ChannelParams channel{};
  PowerConstraint power{};
  double closed_form = 0.0;
  double oracle = 0.0;
  double difference = 0.0;        ///< check-specific discrepancy measure
  double resolution_bound = 0.0;  ///< oracle grid resolution (0 if no oracle)
  bool pass = false;
};

struct VerifyCheck {
  std::string name;
  std::vector<VerifyCase> cases;
  /// Worst discrepancy over all cases (check-specific measure; see name).
  double max_abs_difference = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool pass = false;
};

/// Cross-validate the closed forms against the brute-force oracle over
/// randomly drawn channels, and run the module property checks (gradient
/// vs finite differences, lambda*-family invariance, perturbation
/// negativity, region dominance, max-sum divergence, critical-power
/// identity). Deterministic for a fixed seed.
VerifyReport run_verification(const VerifyOptions& options,
                              const VerifyHooks& hooks = VerifyHooks::defaults());

}  // namespace secrecy
