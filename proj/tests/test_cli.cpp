#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netsort/cli.hpp"
#include "netsort/report.hpp"

using namespace netsort;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

BenchmarkRecord fabricate(Algorithm alg, std::string config, Dist dist,
                          std::size_t size, std::uint64_t iterations,
                          double mean_ns) {
  BenchmarkRecord r;
  r.algorithm = alg;
  r.config_name = std::move(config);
  r.distribution = dist;
  r.size = size;
  r.iterations = iterations;
  r.mean_ns = mean_ns;
  r.total_ns = mean_ns * static_cast<double>(iterations);
  r.wall_mean_ns = mean_ns;
  return r;
}

}  // namespace

TEST_CASE("defaults reproduce the full grid") {
  const CliConfig cfg = parse_args({});
  CHECK(cfg.sizes == std::vector<std::size_t>{10000, 25000, 50000, 100000,
                                              250000, 500000, 1000000});
  CHECK(cfg.distributions ==
        std::vector<Dist>{Dist::random, Dist::sorted, Dist::nearly_sorted});
  CHECK(cfg.config_names.size() == 12);
  CHECK(cfg.config_names.front() == "Classic");
  CHECK(cfg.algorithms ==
        std::vector<Algorithm>{Algorithm::merge_sort, Algorithm::quick_sort});
  CHECK(cfg.seed == 42);
  CHECK(cfg.min_time == std::chrono::milliseconds(500));
  CHECK(cfg.output_path == "results.csv");
  CHECK(cfg.format == OutputFormat::both);

  const CampaignPlan plan = make_plan(cfg);
  CHECK(plan.variants.size() == 24);
  CHECK(plan.sizes.size() * plan.distributions.size() * plan.variants.size() ==
        504);
  CHECK(plan.min_total_time == std::chrono::milliseconds(500));
}

TEST_CASE("the documented example parses as stated") {
  const CliConfig cfg = parse_args(
      {"--configs", "6To8,Classic", "--dist", "random", "--sizes", "10000"});
  CHECK(cfg.config_names == std::vector<std::string>{"6To8", "Classic"});
  CHECK(cfg.distributions == std::vector<Dist>{Dist::random});
  CHECK(cfg.sizes == std::vector<std::size_t>{10000});

  const CampaignPlan plan = make_plan(cfg);
  CHECK(plan.variants.size() == 4);  // 2 configs for each of 2 algorithms
  CHECK(plan.sizes.size() * plan.distributions.size() * plan.variants.size() ==
        4);
}

TEST_CASE("every flag parses") {
  const CliConfig cfg = parse_args(
      {"--sizes", "100,200", "--dist", "sorted,nearly_sorted", "--configs",
       "Classic,VarSort4", "--algos", "quick", "--seed", "7",
       "--min-time-ms", "25", "--out", "bench.csv", "--format", "summary"});
  CHECK(cfg.sizes == std::vector<std::size_t>{100, 200});
  CHECK(cfg.distributions ==
        std::vector<Dist>{Dist::sorted, Dist::nearly_sorted});
  CHECK(cfg.config_names == std::vector<std::string>{"Classic", "VarSort4"});
  CHECK(cfg.algorithms == std::vector<Algorithm>{Algorithm::quick_sort});
  CHECK(cfg.seed == 7);
  CHECK(cfg.min_time == std::chrono::milliseconds(25));
  CHECK(cfg.output_path == "bench.csv");
  CHECK(cfg.format == OutputFormat::summary);
}

TEST_CASE("repeated values collapse to one") {
  const CliConfig cfg = parse_args(
      {"--sizes", "100,100,200", "--configs", "Classic,Classic,3"});
  CHECK(cfg.sizes == std::vector<std::size_t>{100, 200});
  CHECK(cfg.config_names == std::vector<std::string>{"Classic", "3"});
}

TEST_CASE("bad inputs are usage errors") {
  CHECK_THROWS_AS(parse_args({"--configs", "9To12"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--configs", "6To8"}), UsageError);  // no baseline
  CHECK_THROWS_AS(parse_args({"--sizes", "ten"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--sizes", "0"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--wat"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--dist", "gaussian"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--algos", "bubble"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--min-time-ms", "0"}), UsageError);
  CHECK_THROWS_AS(parse_args({"stray"}), UsageError);
  CHECK_THROWS_AS(parse_args({"--help"}), HelpRequested);
}

TEST_CASE("emit_csv renders the exact schema") {
  const auto classical =
      fabricate(Algorithm::merge_sort, "Classic", Dist::random, 100, 10,
                1234.5);
  auto fast = fabricate(Algorithm::merge_sort, "3", Dist::random, 100, 10,
                        617.25);
  const SpeedupRecord s{Algorithm::merge_sort, "3", Dist::random, 100, 2.0};

  std::ostringstream os;
  emit_csv(os, {classical, fast}, {s});
  CHECK(os.str() ==
        "algorithm,config,distribution,size,iterations,mean_ns,total_ns,"
        "speedup\n"
        "MergeSort,Classic,random,100,10,1234.500,12345,1.0000\n"
        "MergeSort,3,random,100,10,617.250,6173,2.0000\n");
}

TEST_CASE("an empty campaign emits a header-only file") {
  std::ostringstream os;
  emit_csv(os, {}, {});
  CHECK(os.str() == std::string(kCsvHeader) + "\n");
}

TEST_CASE("a record without its speedup pairing is an error") {
  const auto orphan =
      fabricate(Algorithm::merge_sort, "3To4", Dist::random, 50, 4, 100.0);
  std::ostringstream os;
  CHECK_THROWS_AS(emit_csv(os, {orphan}, {}), std::invalid_argument);
}

TEST_CASE("the emitted CSV parses back to the written values") {
  const auto classical =
      fabricate(Algorithm::quick_sort, "Classic", Dist::nearly_sorted, 2048,
                33, 40000.125);
  const auto tuned = fabricate(Algorithm::quick_sort, "VarSort5",
                               Dist::nearly_sorted, 2048, 71, 31250.25);
  const SpeedupRecord s{Algorithm::quick_sort, "VarSort5",
                        Dist::nearly_sorted, 2048, 40000.125 / 31250.25};

  std::ostringstream os;
  emit_csv(os, {classical, tuned}, {s});
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == std::string(kCsvHeader));
  std::getline(in, line);
  const std::vector<std::string> row = split_csv(line);
  REQUIRE(row.size() == 8);
  CHECK(row[0] == "QuickSort");
  CHECK(row[1] == "Classic");
  CHECK(row[2] == "nearly_sorted");
  CHECK(std::stoull(row[3]) == 2048);
  CHECK(std::stoull(row[4]) == 33);
  CHECK(std::stod(row[5]) == doctest::Approx(40000.125).epsilon(1e-9));
  CHECK(std::stoull(row[6]) ==
        static_cast<std::uint64_t>(40000.125 * 33 + 0.5));
  CHECK(std::stod(row[7]) == doctest::Approx(1.0));
  std::getline(in, line);
  const std::vector<std::string> opt = split_csv(line);
  REQUIRE(opt.size() == 8);
  CHECK(std::stod(opt[7]) ==
        doctest::Approx(40000.125 / 31250.25).epsilon(1e-4));
}

TEST_CASE("identity columns are byte-stable across runs") {
  const auto run_once = [] {
    CampaignPlan plan;
    plan.sizes = {100};
    plan.distributions = {Distribution{Dist::sorted, 0.01}};
    plan.variants = {SortVariant{Algorithm::merge_sort, classic_config()},
                     SortVariant{Algorithm::merge_sort, *find_config("3")}};
    plan.min_total_time = std::chrono::milliseconds(1);
    const CampaignResult r = run_campaign(plan, {});

    std::ostringstream os;
    emit_csv(os, r.records, r.speedups);
    std::istringstream in(os.str());
    std::string line, kept;
    while (std::getline(in, line)) {
      std::size_t commas = 0;
      std::size_t cut = line.size();
      for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == ',' && ++commas == 4) {
          cut = k;
          break;
        }
      }
      kept += line.substr(0, cut);
      kept += '\n';
    }
    return kept;
  };
  CHECK(run_once() == run_once());
}

TEST_CASE("summary tables group by algorithm and distribution") {
  std::vector<SpeedupRecord> sp;
  for (Algorithm alg : {Algorithm::merge_sort, Algorithm::quick_sort}) {
    for (Dist d : {Dist::random, Dist::sorted, Dist::nearly_sorted}) {
      for (std::size_t n : {10u, 20u}) {
        for (const char* cfg : {"3", "Odd"}) {
          sp.push_back(SpeedupRecord{alg, cfg, d, n, 1.25});
        }
      }
    }
  }
  std::ostringstream os;
  emit_summary(os, sp);
  const std::string text = os.str();
  std::size_t tables = 0;
  for (std::size_t pos = text.find("speedup vs Classic:");
       pos != std::string::npos;
       pos = text.find("speedup vs Classic:", pos + 1)) {
    ++tables;
  }
  CHECK(tables == 6);
  CHECK(text.find("MergeSort, random") != std::string::npos);
  CHECK(text.find("QuickSort, nearly_sorted") != std::string::npos);
  CHECK(text.find("1.25") != std::string::npos);
}

TEST_CASE("a single speedup renders a one-cell table with its band note") {
  std::ostringstream os;
  emit_summary(os, {SpeedupRecord{Algorithm::quick_sort, "3To5", Dist::sorted,
                                  10000, 1.5}});
  const std::string text = os.str();
  CHECK(text.find("QuickSort, sorted") != std::string::npos);
  CHECK(text.find("3To5") != std::string::npos);
  CHECK(text.find("10000") != std::string::npos);
  CHECK(text.find("1.50") != std::string::npos);
  CHECK(text.find("reference") != std::string::npos);
}

TEST_CASE("missing cells render as dashes") {
  const std::vector<SpeedupRecord> sp{
      SpeedupRecord{Algorithm::merge_sort, "3", Dist::random, 10, 1.1},
      SpeedupRecord{Algorithm::merge_sort, "Odd", Dist::random, 20, 1.2},
  };
  std::ostringstream os;
  emit_summary(os, sp);
  CHECK(os.str().find(" -") != std::string::npos);
}

TEST_CASE("no speedups, no summary output") {
  std::ostringstream os;
  emit_summary(os, {});
  CHECK(os.str().empty());
}

TEST_CASE("run_cli maps help and usage errors to their exit codes") {
  std::ostringstream out, err;
  CHECK(run_cli({"--help"}, out, err) == 0);
  CHECK(out.str().find("--sizes") != std::string::npos);
  CHECK(err.str().empty());

  std::ostringstream out2, err2;
  CHECK(run_cli({"--configs", "9To12"}, out2, err2) == 2);
  CHECK(err2.str().find("9To12") != std::string::npos);
  CHECK(out2.str().empty());
}

TEST_CASE("a small end-to-end run writes the CSV and the summary") {
  const fs::path dir = fs::temp_directory_path() / "netsort_cli_e2e";
  fs::create_directories(dir);
  const fs::path csv = dir / "out.csv";

  std::ostringstream out, err;
  const int code =
      run_cli({"--sizes", "200", "--dist", "sorted", "--configs",
               "Classic,3To4", "--algos", "merge", "--min-time-ms", "2",
               "--out", csv.string()},
              out, err);
  CHECK(code == 0);
  REQUIRE(fs::exists(csv));

  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == std::string(kCsvHeader));
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) rows.push_back(line);
  }
  REQUIRE(rows.size() == 2);  // campaign order: Classic first, then 3To4
  CHECK(rows[0].rfind("MergeSort,Classic,sorted,200,", 0) == 0);
  CHECK(rows[1].rfind("MergeSort,3To4,sorted,200,", 0) == 0);
  CHECK(rows[0].substr(rows[0].rfind(',') + 1) == "1.0000");

  CHECK(out.str().find("MergeSort, sorted") != std::string::npos);
  CHECK(err.str().find("[1/2]") != std::string::npos);
  CHECK(err.str().find("[2/2]") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("--format picks which outputs exist") {
  const fs::path dir = fs::temp_directory_path() / "netsort_cli_fmt";
  fs::create_directories(dir);

  const fs::path none = dir / "none.csv";
  std::ostringstream out, err;
  CHECK(run_cli({"--sizes", "64", "--dist", "sorted", "--configs",
                 "Classic,3", "--algos", "quick", "--min-time-ms", "1",
                 "--out", none.string(), "--format", "summary"},
                out, err) == 0);
  CHECK_FALSE(fs::exists(none));       // summary only: no file
  CHECK_FALSE(out.str().empty());

  const fs::path some = dir / "some.csv";
  std::ostringstream out2, err2;
  CHECK(run_cli({"--sizes", "64", "--dist", "sorted", "--configs",
                 "Classic,3", "--algos", "quick", "--min-time-ms", "1",
                 "--out", some.string(), "--format", "csv"},
                out2, err2) == 0);
  CHECK(fs::exists(some));             // csv only: no stdout table
  CHECK(out2.str().empty());
  fs::remove_all(dir);
}

TEST_CASE("unwritable output paths exit with a runtime failure") {
  std::ostringstream out, err;
  const int code =
      run_cli({"--sizes", "50", "--dist", "sorted", "--configs", "Classic,3",
               "--algos", "quick", "--min-time-ms", "1", "--out",
               "/nonexistent_dir_netsort/out.csv"},
              out, err);
  CHECK(code == 1);
  CHECK(err.str().find("/nonexistent_dir_netsort/out.csv") !=
        std::string::npos);
}
