#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netsort/config.hpp"
#include "netsort/datagen.hpp"

namespace netsort {

// Hard stop for the iteration auto-scaler; reached only when per-call time
// underflows the clock (e.g. zero-size inputs) and the total-time target
// cannot be met sensibly. Hitting it sets BenchmarkRecord::iteration_cap_hit.
inline constexpr std::uint64_t kMaxBenchmarkIterations = 1u << 20;

// One measured cell. mean_ns/total_ns are CPU time when the platform has a
// per-process CPU clock, otherwise wall time with cpu_time_used == false.
struct BenchmarkRecord {
  Algorithm algorithm = Algorithm::merge_sort;
  std::string config_name;
  Dist distribution = Dist::random;
  std::size_t size = 0;
  std::uint64_t iterations = 0;
  double mean_ns = 0.0;
  double total_ns = 0.0;
  double wall_mean_ns = 0.0;
  bool cpu_time_used = true;
  bool iteration_cap_hit = false;
};

// A benchmark pair reduced to the ratio T_classical / T_optimized.
struct SpeedupRecord {
  Algorithm algorithm = Algorithm::merge_sort;
  std::string config_name;
  Dist distribution = Dist::random;
  std::size_t size = 0;
  double speedup = 0.0;
};

struct MeasureResult {
  std::uint64_t iterations = 0;
  double total_cpu_ns = 0.0;
  double total_wall_ns = 0.0;
  bool cpu_time_used = true;
  bool cap_hit = false;
};

// Core timing loop. Per iteration: refill the working buffer from `input`
// (untimed), then time one sort_fn call. One untimed warm-up call first.
// Iterations accumulate in batches that double in size until the measured
// total reaches min_total_time or the iteration cap. Strictly
// single-threaded; the process must be otherwise idle during a run.
MeasureResult measure_loop(
    const std::function<void(std::span<std::int64_t>)>& sort_fn,
    std::span<const std::int64_t> input,
    std::chrono::nanoseconds min_total_time);

BenchmarkRecord run_benchmark(const SortVariant& variant, const GenSpec& spec,
                              std::chrono::nanoseconds min_total_time);

// Requires matching algorithm/distribution/size and a "Classic" baseline;
// the optimized mean must be nonzero.
SpeedupRecord compute_speedup(const BenchmarkRecord& classical,
                              const BenchmarkRecord& optimized);

struct CampaignPlan {
  std::vector<std::size_t> sizes;
  std::vector<Distribution> distributions;
  std::vector<SortVariant> variants;
  std::uint64_t seed = 42;
  std::chrono::nanoseconds min_total_time = std::chrono::milliseconds(500);
};

struct CampaignResult {
  std::vector<BenchmarkRecord> records;
  std::vector<SpeedupRecord> speedups;
};

using ProgressFn = std::function<void(const BenchmarkRecord&, std::size_t done,
                                      std::size_t total)>;

// Measures the full cross product in size-major order (then distribution,
// then variant) and pairs every optimized record with its classical
// counterpart. Every algorithm present must bring a Classic variant; that
// is checked before any measurement starts.
CampaignResult run_campaign(const CampaignPlan& plan,
                            const ProgressFn& progress = {});

// Default grid: sizes 10000..1000000, all three distributions, all 24
// bundled variants.
CampaignPlan default_campaign_plan();

}  // namespace netsort
