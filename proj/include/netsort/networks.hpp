#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace netsort {

inline constexpr int kMinNetworkWidth = 2;
inline constexpr int kMaxNetworkWidth = 8;

// One compare-exchange step: after it runs, position lo holds the smaller
// of the two values and hi the larger. Requires 0 <= lo < hi < width.
struct Comparator {
  std::uint8_t lo;
  std::uint8_t hi;
};

// Both selects compile to conditional moves (min/max), not branches.
template <class T>
inline void compare_exchange(T& a, T& b) {
  const bool out_of_order = b < a;
  const T lo = out_of_order ? b : a;
  const T hi = out_of_order ? a : b;
  a = lo;
  b = hi;
}

template <class T>
inline void compare_exchange(std::span<T> window, Comparator c) {
  assert(c.lo < c.hi && c.hi < window.size());
  compare_exchange(window[c.lo], window[c.hi]);
}

// A fixed comparator sequence that sorts any window of exactly `width`
// elements (zero-one complete; exhaustively verified by the test suite).
struct SortingNetwork {
  int width;
  std::span<const Comparator> comparators;
};

namespace detail {

// Optimal-size networks, widths 2..8: sizes 1, 3, 5, 9, 12, 16, 19.
inline constexpr std::array<Comparator, 1> kNet2{{{0, 1}}};

inline constexpr std::array<Comparator, 3> kNet3{
    {{0, 2}, {0, 1}, {1, 2}}};

inline constexpr std::array<Comparator, 5> kNet4{
    {{0, 2}, {1, 3}, {0, 1}, {2, 3}, {1, 2}}};

inline constexpr std::array<Comparator, 9> kNet5{
    {{0, 3}, {1, 4}, {0, 2}, {1, 3}, {0, 1}, {2, 4}, {1, 2}, {3, 4}, {2, 3}}};

inline constexpr std::array<Comparator, 12> kNet6{
    {{0, 5}, {1, 3}, {2, 4}, {1, 2}, {3, 4}, {0, 3},
     {2, 5}, {0, 1}, {2, 3}, {4, 5}, {1, 2}, {3, 4}}};

inline constexpr std::array<Comparator, 16> kNet7{
    {{0, 6}, {2, 3}, {4, 5}, {0, 2}, {1, 4}, {3, 6}, {0, 1}, {2, 5},
     {3, 4}, {1, 2}, {4, 6}, {2, 3}, {4, 5}, {1, 2}, {3, 4}, {5, 6}}};

inline constexpr std::array<Comparator, 19> kNet8{
    {{0, 2}, {1, 3}, {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 1},
     {2, 3}, {4, 5}, {6, 7}, {2, 4}, {3, 5}, {1, 4}, {3, 6}, {1, 2}, {3, 4},
     {5, 6}}};

template <int W>
constexpr const auto& network_table() {
  static_assert(W >= kMinNetworkWidth && W <= kMaxNetworkWidth);
  if constexpr (W == 2) return kNet2;
  else if constexpr (W == 3) return kNet3;
  else if constexpr (W == 4) return kNet4;
  else if constexpr (W == 5) return kNet5;
  else if constexpr (W == 6) return kNet6;
  else if constexpr (W == 7) return kNet7;
  else return kNet8;
}

}  // namespace detail

// Bundled network for one exact width in [2, 8].
inline const SortingNetwork& bundled_network(int width) {
  static const std::array<SortingNetwork, 7> nets{{
      {2, detail::kNet2},
      {3, detail::kNet3},
      {4, detail::kNet4},
      {5, detail::kNet5},
      {6, detail::kNet6},
      {7, detail::kNet7},
      {8, detail::kNet8},
  }};
  if (width < kMinNetworkWidth || width > kMaxNetworkWidth) {
    throw std::invalid_argument("no bundled network of width " +
                                std::to_string(width));
  }
  return nets[static_cast<std::size_t>(width - kMinNetworkWidth)];
}

// Runs `net` on a window whose length must equal the network width.
// A mismatch signals a dispatch bug in the caller.
template <class T>
void apply_network(std::span<T> window, const SortingNetwork& net) {
  if (std::ssize(window) != net.width) {
    throw std::invalid_argument(
        "apply_network: window length " + std::to_string(window.size()) +
        " does not match network width " + std::to_string(net.width));
  }
  for (const Comparator c : net.comparators) {
    compare_exchange(window[c.lo], window[c.hi]);
  }
}

// Width-W sort with the comparator sequence fully unrolled; every index is
// a compile-time constant.
template <int W, class T>
inline void sort_exact(T* v) {
  constexpr const auto& net = detail::network_table<W>();
  [&]<std::size_t... I>(std::index_sequence<I...>) {
    (compare_exchange(v[net[I].lo], v[net[I].hi]), ...);
  }(std::make_index_sequence<net.size()>{});
}

// Runtime-width dispatch to the unrolled networks. The window starting at
// `v` must hold exactly `size` elements, 2 <= size <= 8.
template <class T>
inline void sort_small(T* v, int size) {
  assert(size >= kMinNetworkWidth && size <= kMaxNetworkWidth);
  switch (size) {
    case 2: sort_exact<2>(v); break;
    case 3: sort_exact<3>(v); break;
    case 4: sort_exact<4>(v); break;
    case 5: sort_exact<5>(v); break;
    case 6: sort_exact<6>(v); break;
    case 7: sort_exact<7>(v); break;
    case 8: sort_exact<8>(v); break;
    default: break;
  }
}

// Variable-width dispatcher: routes a window of length L to the width-L
// network for 2 <= L <= max_width; lengths 0 and 1 are no-ops.
struct VarSortNetwork {
  int max_width;  // 3, 4, or 5

  const SortingNetwork& network_for(int length) const {
    assert(length >= 2 && length <= max_width);
    return bundled_network(length);
  }
};

inline VarSortNetwork varsort_network(int max_width) {
  if (max_width < 3 || max_width > 5) {
    throw std::invalid_argument("varsort max width must be 3, 4, or 5, got " +
                                std::to_string(max_width));
  }
  return VarSortNetwork{max_width};
}

template <class T>
void apply_varsort(std::span<T> window, const VarSortNetwork& net) {
  const auto length = std::ssize(window);
  if (length > net.max_width) {
    throw std::invalid_argument(
        "apply_varsort: window length " + std::to_string(window.size()) +
        " exceeds dispatcher max width " + std::to_string(net.max_width));
  }
  if (length < 2) return;
  sort_small(window.data(), static_cast<int>(length));
}

}  // namespace netsort
