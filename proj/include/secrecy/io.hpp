#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "secrecy/optima.hpp"
#include "secrecy/region.hpp"
#include "secrecy/verify.hpp"

namespace secrecy {

/// One CLI invocation, echoed into JSON output so runs are reproducible.
struct RunConfig {
  std::string command;
  ChannelParams channel{1.0, 0.05, 1.0};
  double P = 100.0;
  std::vector<double> p_list;
  std::vector<double> ac_list;
  GridSpec grid{};
  std::string format = "json";  ///< "json" or "csv"
  std::string out;              ///< output file/directory ("" = stdout)
  std::uint64_t seed = 2024;
  bool no_an = false;           ///< pin lambda = 0 in region sampling
  bool emit_frontier = false;   ///< include raw frontier rows in region CSV
  int user = 1;
  int draws = 50;               ///< verify: number of random channels
};

/// Format a double with 12 significant digits (%.12g), the canonical
/// textual form for all numeric output.
std::string format_number(double value);

/// Round to 12 significant decimal digits, used to canonicalise values
/// before JSON serialisation. Non-finite values pass through.
double round_sig(double value);

/// Write a region as CSV rows `r1,r2,kind`, kind in {frontier, hull}.
/// Hull vertices are always written; frontier rows are opt-in.
void write_region_csv(std::ostream& os, const RegionEstimate& region,
                      bool include_frontier);

// JSON serialisers (pretty-printed, deterministic field order).
std::string to_json(const RunConfig& config, const MaxMinSolution& sol);
std::string to_json(const RunConfig& config, const SingleUserSolution& sol);
std::string to_json(const RunConfig& config, double critical_power,
                    const std::vector<std::pair<double, ModeComparison>>& modes);
std::string to_json(const RunConfig& config, const RegionEstimate& region);
std::string to_json(const RunConfig& config, const VerifyReport& report);

// CSV serialisers (key,value rows for scalar reports).
std::string to_csv(const RunConfig& config, const MaxMinSolution& sol);
std::string to_csv(const RunConfig& config, const SingleUserSolution& sol);
std::string to_csv(const RunConfig& config, double critical_power,
                   const std::vector<std::pair<double, ModeComparison>>& modes);
std::string to_csv(const RunConfig& config, const VerifyReport& report);

}  // namespace secrecy
