// Command-line front end: closed-form operating points, region exports
// for plotting, and the oracle verification suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "secrecy/io.hpp"
#include "secrecy/optima.hpp"
#include "secrecy/region.hpp"
#include "secrecy/verify.hpp"

namespace {

using namespace secrecy;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

std::string region_payload(const RunConfig& config, const RegionEstimate& region) {
  if (config.format == "json") return to_json(config, region);
  std::ostringstream os;
  write_region_csv(os, region, config.emit_frontier);
  return os.str();
}

// region_P100_an.csv / region_ac0.2_noan.json style sweep file names.
std::string sweep_file_name(const std::string& axis, double value, bool an,
                            const std::string& format) {
  return "region_" + axis + format_number(value) + (an ? "_an" : "_noan") +
         (format == "json" ? ".json" : ".csv");
}

int cmd_region(RunConfig config, bool grid_power_given) {
  // 2-D sampling (lambda pinned) affords a much denser power grid at the
  // same cost; keep the 4-D default modest.
  GridSpec an_grid = config.grid;
  GridSpec noan_grid = config.grid;
  if (!grid_power_given) noan_grid.n_power = 200;

  const bool sweep = !config.p_list.empty() || !config.ac_list.empty();
  if (!sweep) {
    const bool an = !config.no_an;
    const RegionEstimate region = sample_region(
        config.channel, {config.P}, an ? an_grid : noan_grid, an);
    write_output(region_payload(config, region), config.out);
    return 0;
  }

  if (config.out.empty())
    throw std::runtime_error("region sweeps require --out <directory>");
  std::filesystem::create_directories(config.out);
  const std::filesystem::path dir(config.out);

  std::vector<std::pair<std::filesystem::path, std::string>> files;
  if (!config.p_list.empty()) {
    const bool an = !config.no_an;
    for (const double p : config.p_list) {
      RunConfig c = config;
      c.P = p;
      const RegionEstimate region =
          sample_region(c.channel, {p}, an ? an_grid : noan_grid, an);
      files.emplace_back(dir / sweep_file_name("P", p, an, config.format),
                         region_payload(c, region));
    }
  }
  for (const double ac : config.ac_list) {
    RunConfig c = config;
    c.channel.ac = ac;
    for (const bool an : {true, false}) {
      c.no_an = !an;
      const RegionEstimate region =
          sample_region(c.channel, {c.P}, an ? an_grid : noan_grid, an);
      files.emplace_back(dir / sweep_file_name("ac", ac, an, config.format),
                         region_payload(c, region));
    }
  }
  for (const auto& [path, payload] : files) write_output(payload, path.string());
  std::cout << "wrote " << files.size() << " region files to " << dir.string() << "\n";
  return 0;
}

int cmd_verify(const RunConfig& config) {
  VerifyOptions options;
  options.n_channels = config.draws;
  options.seed = config.seed;
  options.grid = config.grid;
  const VerifyReport report = run_verification(options);
  write_output(config.format == "csv" ? to_csv(config, report)
                                      : to_json(config, report),
               config.out);
  return report.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Achievable secrecy-rate regions for the two-user symmetric Gaussian "
      "interference channel with artificial noise"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a flat key=value file");

  RunConfig config;
  app.add_option("--a", config.channel.a, "direct-channel power gain")
      ->capture_default_str();
  app.add_option("--ac", config.channel.ac, "cross-channel power gain")
      ->capture_default_str();
  app.add_option("--n", config.channel.N, "noise power")->capture_default_str();
  app.add_option("--p", config.P, "peak transmit power")->capture_default_str();
  app.add_option("--p-list", config.p_list, "peak-power sweep (region, critical)");
  app.add_option("--ac-list", config.ac_list,
                 "cross-gain sweep (region; emits AN on/off pairs)");
  app.add_option("--grid-power", config.grid.n_power, "grid points per power axis")
      ->capture_default_str();
  app.add_option("--grid-lambda", config.grid.n_lambda, "grid points per lambda axis")
      ->capture_default_str();
  app.add_option("--refine", config.grid.refine_rounds, "oracle refinement rounds")
      ->capture_default_str();
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "output file (sweeps: output directory)");
  app.add_option("--seed", config.seed, "seed for randomized verification")
      ->capture_default_str();
  app.add_flag("--no-an", config.no_an, "pin lambda = 0 (no artificial noise)");
  app.add_flag("--frontier", config.emit_frontier,
               "include raw Pareto-frontier rows in region CSV");
  app.add_option("--user", config.user, "communicating user (single-user point)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  app.add_option("--draws", config.draws, "verify: number of random channels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* sub_maxmin = app.add_subcommand("maxmin", "max-min operating point");
  CLI::App* sub_single =
      app.add_subcommand("single-user", "single-user operating point");
  CLI::App* sub_critical =
      app.add_subcommand("critical", "critical power and operating-mode comparison");
  CLI::App* sub_region = app.add_subcommand("region", "achievable-region export");
  CLI::App* sub_verify =
      app.add_subcommand("verify", "closed-form vs oracle verification suite");
  for (CLI::App* sub : {sub_maxmin, sub_single, sub_critical, sub_region, sub_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_maxmin->parsed()) {
      config.command = "maxmin";
      const MaxMinSolution sol = maxmin_point(config.channel, {config.P});
      write_output(config.format == "csv" ? to_csv(config, sol) : to_json(config, sol),
                   config.out);
      return 0;
    }
    if (sub_single->parsed()) {
      config.command = "single-user";
      const SingleUserSolution sol =
          single_user_point(config.channel, {config.P}, config.user);
      write_output(config.format == "csv" ? to_csv(config, sol) : to_json(config, sol),
                   config.out);
      return 0;
    }
    if (sub_critical->parsed()) {
      config.command = "critical";
      const double pc = critical_power(config.channel);
      std::vector<std::pair<double, ModeComparison>> modes;
      std::vector<double> p_values = config.p_list;
      if (p_values.empty() && app.count("--p") > 0) p_values.push_back(config.P);
      for (const double p : p_values)
        modes.emplace_back(p, compare_operating_modes(config.channel, {p}));
      write_output(config.format == "csv" ? to_csv(config, pc, modes)
                                          : to_json(config, pc, modes),
                   config.out);
      return 0;
    }
    if (sub_region->parsed()) {
      config.command = "region";
      return cmd_region(config, app.count("--grid-power") > 0);
    }
    config.command = "verify";
    return cmd_verify(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
