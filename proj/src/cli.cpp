#include "netsort/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "netsort/report.hpp"

namespace netsort {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

Dist parse_dist(const std::string& raw) {
  const std::string s = to_lower(raw);
  if (s == "random") return Dist::random;
  if (s == "sorted") return Dist::sorted;
  if (s == "nearly_sorted" || s == "nearly-sorted" || s == "nearlysorted") {
    return Dist::nearly_sorted;
  }
  throw UsageError("unknown distribution \"" + raw +
                   "\" (expected random, sorted, nearly_sorted)");
}

Algorithm parse_algorithm(const std::string& raw) {
  const std::string s = to_lower(raw);
  if (s == "merge" || s == "mergesort" || s == "merge_sort") {
    return Algorithm::merge_sort;
  }
  if (s == "quick" || s == "quicksort" || s == "quick_sort") {
    return Algorithm::quick_sort;
  }
  throw UsageError("unknown algorithm \"" + raw +
                   "\" (expected merge or quick)");
}

std::string known_config_names() {
  std::string names;
  for (const NetworkConfig& cfg : config_registry()) {
    if (!names.empty()) names += ", ";
    names += cfg.name;
  }
  return names;
}

// Drops repeated entries while keeping first-occurrence order.
template <typename T>
void dedupe(std::vector<T>& values) {
  std::set<T> seen;
  values.erase(std::remove_if(values.begin(), values.end(),
                              [&](const T& v) { return !seen.insert(v).second; }),
               values.end());
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  std::vector<std::string> dist_names;
  std::vector<std::string> algo_names;
  std::uint64_t min_time_ms = 500;
  std::string format_name = "both";

  CLI::App app{"hybrid sort benchmark: sorting-network base cases vs classic",
               "netsort-bench"};
  app.add_option("--sizes", cfg.sizes, "array sizes to benchmark")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--dist", dist_names,
                 "input distributions: random, sorted, nearly_sorted")
      ->delimiter(',');
  app.add_option("--configs", cfg.config_names,
                 "network configs by name; must include Classic")
      ->delimiter(',');
  app.add_option("--algos", algo_names, "algorithms: merge, quick")
      ->delimiter(',');
  app.add_option("--seed", cfg.seed, "base seed for input generation");
  app.add_option("--min-time-ms", min_time_ms,
                 "minimum measured time per cell, in milliseconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.output_path, "CSV output path");
  app.add_option("--format", format_name, "outputs: csv, summary, both")
      ->check(CLI::IsMember({"csv", "summary", "both"}));
  app.footer(
      "example: netsort-bench --configs 6To8,Classic --dist random"
      " --sizes 10000");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (cfg.sizes.empty()) {
    cfg.sizes = {10000, 25000, 50000, 100000, 250000, 500000, 1000000};
  }
  if (dist_names.empty()) {
    cfg.distributions = {Dist::random, Dist::sorted, Dist::nearly_sorted};
  } else {
    for (const std::string& name : dist_names) {
      cfg.distributions.push_back(parse_dist(name));
    }
  }
  if (algo_names.empty()) {
    cfg.algorithms = {Algorithm::merge_sort, Algorithm::quick_sort};
  } else {
    for (const std::string& name : algo_names) {
      cfg.algorithms.push_back(parse_algorithm(name));
    }
  }
  if (cfg.config_names.empty()) {
    for (const NetworkConfig& preset : config_registry()) {
      cfg.config_names.push_back(preset.name);
    }
  } else {
    for (const std::string& name : cfg.config_names) {
      if (find_config(name) == nullptr) {
        throw UsageError("unknown config name \"" + name +
                         "\" (known: " + known_config_names() + ")");
      }
    }
    if (std::find(cfg.config_names.begin(), cfg.config_names.end(),
                  "Classic") == cfg.config_names.end()) {
      throw UsageError("--configs must include Classic, the speedup baseline");
    }
  }
  dedupe(cfg.sizes);
  dedupe(cfg.distributions);
  dedupe(cfg.config_names);
  dedupe(cfg.algorithms);

  cfg.min_time = std::chrono::milliseconds(min_time_ms);
  if (format_name == "csv") {
    cfg.format = OutputFormat::csv;
  } else if (format_name == "summary") {
    cfg.format = OutputFormat::summary;
  } else {
    cfg.format = OutputFormat::both;
  }
  return cfg;
}

CampaignPlan make_plan(const CliConfig& cfg) {
  CampaignPlan plan;
  plan.sizes = cfg.sizes;
  for (Dist d : cfg.distributions) {
    plan.distributions.push_back(Distribution{d});
  }
  for (Algorithm alg : cfg.algorithms) {
    for (const std::string& name : cfg.config_names) {
      plan.variants.push_back(SortVariant{alg, *find_config(name)});
    }
  }
  plan.seed = cfg.seed;
  plan.min_total_time = cfg.min_time;
  return plan;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& usage) {
    err << "error: " << usage.what() << '\n';
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    const CampaignPlan plan = make_plan(cfg);
    bool warned_wall_clock = false;
    const ProgressFn progress = [&](const BenchmarkRecord& rec,
                                    std::size_t done, std::size_t total) {
      err << '[' << done << '/' << total << "] "
          << algorithm_name(rec.algorithm) << ' ' << rec.config_name << ' '
          << dist_name(rec.distribution) << " n=" << rec.size << ": "
          << rec.iterations << " iterations, mean "
          << std::llround(rec.mean_ns) << " ns\n";
      if (!rec.cpu_time_used && !warned_wall_clock) {
        err << "warning: no per-process CPU clock; timings are wall time\n";
        warned_wall_clock = true;
      }
      if (rec.iteration_cap_hit) {
        err << "warning: iteration cap reached before the time target\n";
      }
    };
    const CampaignResult result = run_campaign(plan, progress);

    if (cfg.format != OutputFormat::summary) {
      emit_csv(cfg.output_path, result.records, result.speedups);
      err << "wrote " << cfg.output_path << '\n';
    }
    if (cfg.format != OutputFormat::csv) {
      emit_summary(out, result.speedups);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  if (argc > 1) {
    args.assign(argv + 1, argv + argc);
  }
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace netsort
