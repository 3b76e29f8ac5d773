#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "netsort/networks.hpp"

namespace netsort {

enum class Algorithm { merge_sort, quick_sort };

std::string_view algorithm_name(Algorithm a);

// A named selection of network base cases. Bit w of width_mask enables the
// fixed width-w network; varsort_max != 0 enables the variable dispatcher
// for lengths 2..varsort_max. "Classic" is the empty selection.
struct NetworkConfig {
  std::string name;
  std::uint32_t width_mask = 0;
  int varsort_max = 0;

  bool is_classic() const { return width_mask == 0 && varsort_max == 0; }
};

// True when a window of `size` elements goes straight to a network.
// Fixed widths win over a varsort dispatcher when both would match.
inline bool base_case_applies(std::ptrdiff_t size, const NetworkConfig& cfg) {
  if (size >= kMinNetworkWidth && size <= kMaxNetworkWidth &&
      ((cfg.width_mask >> size) & 1u)) {
    return true;
  }
  return cfg.varsort_max != 0 && size >= 2 && size <= cfg.varsort_max;
}

// Builds a fixed-width config; widths must lie in [3, 8].
NetworkConfig make_fixed_config(std::string name,
                                std::initializer_list<int> widths);

// Builds a varsort config; max_width must be 3, 4, or 5.
NetworkConfig make_varsort_config(std::string name, int max_width);

NetworkConfig classic_config();

// Bundled presets in a fixed order: Classic, PowerOf2, Even, Odd, 3, 3To4,
// 3To5, 3To8, 6To8, VarSort3, VarSort4, VarSort5.
const std::vector<NetworkConfig>& config_registry();

// nullptr when the name is not in the registry.
const NetworkConfig* find_config(std::string_view name);

struct SortVariant {
  Algorithm algorithm;
  NetworkConfig config;
};

// The 24 bundled variants: both algorithms crossed with the full registry.
std::vector<SortVariant> bundled_variants();

}  // namespace netsort
