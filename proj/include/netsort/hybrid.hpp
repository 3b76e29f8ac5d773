#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>

#include "netsort/config.hpp"
#include "netsort/networks.hpp"

namespace netsort {

// Counters for one sort call, filled by the stats-taking entry points.
struct DispatchStats {
  std::array<std::uint64_t, kMaxNetworkWidth + 1> network_hits{};  // by width
  std::uint64_t merges = 0;
  std::uint64_t partitions = 0;
  int max_depth = 0;

  std::uint64_t total_network_hits() const {
    std::uint64_t total = 0;
    for (std::uint64_t h : network_hits) total += h;
    return total;
  }

  void network(int width) { ++network_hits[static_cast<std::size_t>(width)]; }
  void merge() { ++merges; }
  void partition() { ++partitions; }
  void depth(int d) { max_depth = std::max(max_depth, d); }
};

// Zero-cost stand-in for the timed path.
struct NoStats {
  void network(int) {}
  void merge() {}
  void partition() {}
  void depth(int) {}
};

namespace detail {

// Sorts window [left, left+size) with the width-`size` network when the
// config enables it.
template <class T, class Stats>
inline bool try_base_case(std::span<T> a, std::ptrdiff_t left,
                          std::ptrdiff_t size, const NetworkConfig& cfg,
                          Stats& stats) {
  if (!base_case_applies(size, cfg)) return false;
  stats.network(static_cast<int>(size));
  sort_small(a.data() + left, static_cast<int>(size));
  return true;
}

// Stable merge of the sorted runs [left..mid] and [mid+1..right]. Only the
// left run is staged in scratch; the write cursor never overtakes the read
// cursor of the right run.
template <class T>
void merge_runs(std::span<T> a, std::ptrdiff_t left, std::ptrdiff_t mid,
                std::ptrdiff_t right, T* scratch) {
  const std::ptrdiff_t left_len = mid - left + 1;
  std::copy(a.data() + left, a.data() + mid + 1, scratch);
  std::ptrdiff_t i = 0;
  std::ptrdiff_t j = mid + 1;
  std::ptrdiff_t out = left;
  while (i < left_len && j <= right) {
    // left-run element wins ties to keep the merge stable
    if (a[j] < scratch[i]) {
      a[out++] = a[j++];
    } else {
      a[out++] = scratch[i++];
    }
  }
  while (i < left_len) a[out++] = scratch[i++];
  // any right-run tail is already in place
}

template <class T, class Stats>
void merge_sort_rec(std::span<T> a, std::ptrdiff_t left, std::ptrdiff_t right,
                    const NetworkConfig& cfg, T* scratch, Stats& stats,
                    int depth) {
  stats.depth(depth);
  const std::ptrdiff_t size = right - left + 1;
  if (try_base_case(a, left, size, cfg, stats)) return;
  if (left < right) {
    const std::ptrdiff_t mid = left + (right - left) / 2;
    merge_sort_rec(a, left, mid, cfg, scratch, stats, depth + 1);
    merge_sort_rec(a, mid + 1, right, cfg, scratch, stats, depth + 1);
    stats.merge();
    merge_runs(a, left, mid, right, scratch);
  }
}

template <class T, class Stats>
void quick_sort_rec(std::span<T> a, std::ptrdiff_t low, std::ptrdiff_t high,
                    const NetworkConfig& cfg, Stats& stats, int depth);

}  // namespace detail

// Median of a[low], a[low + (high-low)/2], a[high]; the three probed
// positions are sorted in place. Ranges of length 1 or 2 yield a[low].
template <class T>
T median_of_three(std::span<T> a, std::ptrdiff_t low, std::ptrdiff_t high) {
  assert(low >= 0 && low <= high && high < std::ssize(a));
  if (high - low < 2) return a[low];
  const std::ptrdiff_t mid = low + (high - low) / 2;
  compare_exchange(a[low], a[mid]);
  compare_exchange(a[low], a[high]);
  compare_exchange(a[mid], a[high]);
  return a[mid];
}

// Two-cursor inward scan. Returns j with low <= j < high such that
// [low..j] <= pivot and [j+1..high] >= pivot. Requires low < high and a
// pivot value that occurs in a[low..high]. The plain scan yields j == high
// only when the pivot is the unique strict maximum, sitting at high; the
// split high-1 satisfies the same predicate there.
template <class T>
std::ptrdiff_t hoare_partition(std::span<T> a, std::ptrdiff_t low,
                               std::ptrdiff_t high, T pivot) {
  assert(low >= 0 && low < high && high < std::ssize(a));
  std::ptrdiff_t i = low - 1;
  std::ptrdiff_t j = high + 1;
  for (;;) {
    do { ++i; } while (a[i] < pivot);
    do { --j; } while (pivot < a[j]);
    if (i >= j) return j < high ? j : high - 1;
    std::swap(a[i], a[j]);
  }
}

namespace detail {

template <class T, class Stats>
void quick_sort_rec(std::span<T> a, std::ptrdiff_t low, std::ptrdiff_t high,
                    const NetworkConfig& cfg, Stats& stats, int depth) {
  stats.depth(depth);
  const std::ptrdiff_t size = high - low + 1;
  if (try_base_case(a, low, size, cfg, stats)) return;
  if (low < high) {
    const T pivot = median_of_three(a, low, high);
    stats.partition();
    const std::ptrdiff_t split = hoare_partition(a, low, high, pivot);
    quick_sort_rec(a, low, split, cfg, stats, depth + 1);
    quick_sort_rec(a, split + 1, high, cfg, stats, depth + 1);
  }
}

}  // namespace detail

// Merge sort over the inclusive range [left, right]; right < left is a
// no-op. Scratch of range length is allocated once per top-level call.
template <class T, class Stats>
void optimized_merge_sort(std::span<T> a, std::ptrdiff_t left,
                          std::ptrdiff_t right, const NetworkConfig& cfg,
                          Stats& stats) {
  if (right < left) return;
  assert(left >= 0 && right < std::ssize(a));
  const std::ptrdiff_t size = right - left + 1;
  std::unique_ptr<T[]> scratch(new T[static_cast<std::size_t>(size)]);
  detail::merge_sort_rec(a, left, right, cfg, scratch.get(), stats, 1);
}

template <class T>
void optimized_merge_sort(std::span<T> a, std::ptrdiff_t left,
                          std::ptrdiff_t right, const NetworkConfig& cfg) {
  NoStats stats;
  optimized_merge_sort(a, left, right, cfg, stats);
}

template <class T>
void optimized_merge_sort(std::span<T> a, const NetworkConfig& cfg) {
  optimized_merge_sort(a, 0, std::ssize(a) - 1, cfg);
}

// Stable top-down merge sort with single-element base case.
template <class T>
void classical_merge_sort(std::span<T> a) {
  optimized_merge_sort(a, classic_config());
}

// Standalone stable merge of [left..mid] and [mid+1..right].
template <class T>
void merge(std::span<T> a, std::ptrdiff_t left, std::ptrdiff_t mid,
           std::ptrdiff_t right) {
  assert(left >= 0 && left <= mid && mid <= right && right < std::ssize(a));
  const std::ptrdiff_t left_len = mid - left + 1;
  std::unique_ptr<T[]> scratch(new T[static_cast<std::size_t>(left_len)]);
  detail::merge_runs(a, left, mid, right, scratch.get());
}

// Quick sort over the inclusive range [low, high]; high < low is a no-op.
// Median-of-three pivot, Hoare partition, no depth fallback.
template <class T, class Stats>
void optimized_quick_sort(std::span<T> a, std::ptrdiff_t low,
                          std::ptrdiff_t high, const NetworkConfig& cfg,
                          Stats& stats) {
  if (high < low) return;
  assert(low >= 0 && high < std::ssize(a));
  detail::quick_sort_rec(a, low, high, cfg, stats, 1);
}

template <class T>
void optimized_quick_sort(std::span<T> a, std::ptrdiff_t low,
                          std::ptrdiff_t high, const NetworkConfig& cfg) {
  NoStats stats;
  optimized_quick_sort(a, low, high, cfg, stats);
}

template <class T>
void optimized_quick_sort(std::span<T> a, const NetworkConfig& cfg) {
  optimized_quick_sort(a, 0, std::ssize(a) - 1, cfg);
}

// Same pivot and partition scheme as the optimized variant; the network
// base case is the only delta between the two.
template <class T>
void classical_quick_sort(std::span<T> a) {
  optimized_quick_sort(a, classic_config());
}

template <class T>
void run_variant(const SortVariant& variant, std::span<T> a) {
  if (variant.algorithm == Algorithm::merge_sort) {
    optimized_merge_sort(a, variant.config);
  } else {
    optimized_quick_sort(a, variant.config);
  }
}

template <class T>
void run_variant(const SortVariant& variant, std::span<T> a,
                 DispatchStats& stats) {
  if (a.empty()) return;
  if (variant.algorithm == Algorithm::merge_sort) {
    optimized_merge_sort(a, 0, std::ssize(a) - 1, variant.config, stats);
  } else {
    optimized_quick_sort(a, 0, std::ssize(a) - 1, variant.config, stats);
  }
}

}  // namespace netsort
