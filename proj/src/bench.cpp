#include "netsort/bench.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "netsort/hybrid.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <time.h>
#define NETSORT_HAS_CPU_CLOCK 1
#else
#define NETSORT_HAS_CPU_CLOCK 0
#endif

namespace netsort {

namespace {

inline double wall_now_ns() {
  const auto t = std::chrono::steady_clock::now().time_since_epoch();
  return static_cast<double>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t).count());
}

#if NETSORT_HAS_CPU_CLOCK
inline double cpu_now_ns() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e9 + static_cast<double>(ts.tv_nsec);
}
#endif

constexpr bool kHasCpuClock = NETSORT_HAS_CPU_CLOCK != 0;

}  // namespace

MeasureResult measure_loop(
    const std::function<void(std::span<std::int64_t>)>& sort_fn,
    std::span<const std::int64_t> input,
    std::chrono::nanoseconds min_total_time) {
  if (min_total_time.count() <= 0) {
    throw std::invalid_argument("min_total_time must be positive");
  }

  std::vector<std::int64_t> work(input.size());
  const auto refill = [&] {
    std::copy(input.begin(), input.end(), work.begin());
  };

  // warm-up, untimed
  refill();
  sort_fn(work);

  MeasureResult result;
  result.cpu_time_used = kHasCpuClock;
  const double target_ns = static_cast<double>(min_total_time.count());

  std::uint64_t batch = 1;
  for (;;) {
    for (std::uint64_t k = 0; k < batch; ++k) {
      refill();
#if NETSORT_HAS_CPU_CLOCK
      const double c0 = cpu_now_ns();
#endif
      const double w0 = wall_now_ns();
      sort_fn(work);
      const double w1 = wall_now_ns();
#if NETSORT_HAS_CPU_CLOCK
      const double c1 = cpu_now_ns();
      result.total_cpu_ns += c1 - c0;
#endif
      result.total_wall_ns += w1 - w0;
      ++result.iterations;
    }
    const double canonical =
        kHasCpuClock ? result.total_cpu_ns : result.total_wall_ns;
    if (canonical >= target_ns) break;
    if (result.iterations >= kMaxBenchmarkIterations) {
      result.cap_hit = true;
      break;
    }
    batch = std::min(batch * 2,
                     kMaxBenchmarkIterations - result.iterations);
  }
  if (!kHasCpuClock) result.total_cpu_ns = result.total_wall_ns;
  return result;
}

BenchmarkRecord run_benchmark(const SortVariant& variant, const GenSpec& spec,
                              std::chrono::nanoseconds min_total_time) {
  const std::vector<std::int64_t> input = generate(spec);
  const auto sort_fn = [&variant](std::span<std::int64_t> a) {
    run_variant(variant, a);
  };
  const MeasureResult m = measure_loop(sort_fn, input, min_total_time);

  BenchmarkRecord rec;
  rec.algorithm = variant.algorithm;
  rec.config_name = variant.config.name;
  rec.distribution = spec.distribution.kind;
  rec.size = spec.size;
  rec.iterations = m.iterations;
  rec.total_ns = m.total_cpu_ns;
  rec.mean_ns = m.total_cpu_ns / static_cast<double>(m.iterations);
  rec.wall_mean_ns = m.total_wall_ns / static_cast<double>(m.iterations);
  rec.cpu_time_used = m.cpu_time_used;
  rec.iteration_cap_hit = m.cap_hit;
  return rec;
}

SpeedupRecord compute_speedup(const BenchmarkRecord& classical,
                              const BenchmarkRecord& optimized) {
  if (classical.algorithm != optimized.algorithm ||
      classical.distribution != optimized.distribution ||
      classical.size != optimized.size) {
    throw std::invalid_argument(
        "compute_speedup: records do not share algorithm, distribution, and "
        "size");
  }
  if (classical.config_name != "Classic") {
    throw std::invalid_argument(
        "compute_speedup: baseline record must use the Classic config, got " +
        classical.config_name);
  }
  if (optimized.mean_ns == 0.0) {
    throw std::runtime_error(
        "compute_speedup: optimized mean time is zero (measurement error)");
  }
  SpeedupRecord s;
  s.algorithm = optimized.algorithm;
  s.config_name = optimized.config_name;
  s.distribution = optimized.distribution;
  s.size = optimized.size;
  s.speedup = classical.mean_ns / optimized.mean_ns;
  return s;
}

CampaignResult run_campaign(const CampaignPlan& plan,
                            const ProgressFn& progress) {
  // baseline check before any measurement
  for (const SortVariant& v : plan.variants) {
    bool has_classic = false;
    for (const SortVariant& w : plan.variants) {
      if (w.algorithm == v.algorithm && w.config.name == "Classic") {
        has_classic = true;
        break;
      }
    }
    if (!has_classic) {
      throw std::invalid_argument(
          std::string("run_campaign: no Classic baseline for ") +
          std::string(algorithm_name(v.algorithm)));
    }
  }

  CampaignResult result;
  const std::size_t total =
      plan.sizes.size() * plan.distributions.size() * plan.variants.size();
  result.records.reserve(total);

  for (std::size_t size : plan.sizes) {
    for (const Distribution& dist : plan.distributions) {
      for (const SortVariant& variant : plan.variants) {
        GenSpec spec{size, dist, plan.seed};
        result.records.push_back(
            run_benchmark(variant, spec, plan.min_total_time));
        if (progress) {
          progress(result.records.back(), result.records.size(), total);
        }
      }
    }
  }

  // pair every optimized record with its classical counterpart
  std::map<std::tuple<Algorithm, Dist, std::size_t>, const BenchmarkRecord*>
      baselines;
  for (const BenchmarkRecord& rec : result.records) {
    if (rec.config_name == "Classic") {
      baselines.emplace(std::make_tuple(rec.algorithm, rec.distribution,
                                        rec.size),
                        &rec);
    }
  }
  for (const BenchmarkRecord& rec : result.records) {
    if (rec.config_name == "Classic") continue;
    const auto it = baselines.find(
        std::make_tuple(rec.algorithm, rec.distribution, rec.size));
    if (it == baselines.end()) {
      throw std::runtime_error("run_campaign: missing baseline record");
    }
    result.speedups.push_back(compute_speedup(*it->second, rec));
  }
  return result;
}

CampaignPlan default_campaign_plan() {
  CampaignPlan plan;
  plan.sizes = {10000, 25000, 50000, 100000, 250000, 500000, 1000000};
  plan.distributions = {Distribution{Dist::random, 0.01},
                        Distribution{Dist::sorted, 0.01},
                        Distribution{Dist::nearly_sorted, 0.01}};
  plan.variants = bundled_variants();
  return plan;
}

}  // namespace netsort
