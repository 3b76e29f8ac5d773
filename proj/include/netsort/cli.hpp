#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "netsort/bench.hpp"

namespace netsort {

enum class OutputFormat { csv, summary, both };

// Parsed command line. Defaults reproduce the full benchmark grid: all
// sizes, all distributions, every registry config, both algorithms.
struct CliConfig {
  std::vector<std::size_t> sizes;
  std::vector<Dist> distributions;
  std::vector<std::string> config_names;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed = 42;
  std::chrono::milliseconds min_time{500};
  std::string output_path = "results.csv";
  OutputFormat format = OutputFormat::both;
};

// Malformed flag, number, or name; what() is the user-facing message.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help was given; what() is the rendered help text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses flags (program name excluded) and fills in defaults. Throws
// UsageError or HelpRequested; never exits.
CliConfig parse_args(const std::vector<std::string>& args);

// Expands a parsed config into the benchmark plan it selects.
CampaignPlan make_plan(const CliConfig& cfg);

// Entry point: parse, measure, emit. Progress and warnings go to err;
// tables to out; CSV to the configured path. Returns 0 on success, 2 on
// usage errors, 1 on runtime failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace netsort
