#include "netsort/config.hpp"

#include <stdexcept>

namespace netsort {

std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::merge_sort ? "MergeSort" : "QuickSort";
}

NetworkConfig make_fixed_config(std::string name,
                                std::initializer_list<int> widths) {
  NetworkConfig cfg;
  cfg.name = std::move(name);
  for (int w : widths) {
    if (w < 3 || w > kMaxNetworkWidth) {
      throw std::invalid_argument("fixed network width must be in [3, 8], got " +
                                  std::to_string(w));
    }
    cfg.width_mask |= 1u << w;
  }
  return cfg;
}

NetworkConfig make_varsort_config(std::string name, int max_width) {
  varsort_network(max_width);  // validates the range
  NetworkConfig cfg;
  cfg.name = std::move(name);
  cfg.varsort_max = max_width;
  return cfg;
}

NetworkConfig classic_config() { return NetworkConfig{"Classic", 0, 0}; }

const std::vector<NetworkConfig>& config_registry() {
  static const std::vector<NetworkConfig> registry = [] {
    std::vector<NetworkConfig> r;
    r.push_back(classic_config());
    r.push_back(make_fixed_config("PowerOf2", {4, 8}));
    r.push_back(make_fixed_config("Even", {4, 6, 8}));
    r.push_back(make_fixed_config("Odd", {3, 5, 7}));
    r.push_back(make_fixed_config("3", {3}));
    r.push_back(make_fixed_config("3To4", {3, 4}));
    r.push_back(make_fixed_config("3To5", {3, 4, 5}));
    r.push_back(make_fixed_config("3To8", {3, 4, 5, 6, 7, 8}));
    r.push_back(make_fixed_config("6To8", {6, 7, 8}));
    r.push_back(make_varsort_config("VarSort3", 3));
    r.push_back(make_varsort_config("VarSort4", 4));
    r.push_back(make_varsort_config("VarSort5", 5));
    return r;
  }();
  return registry;
}

const NetworkConfig* find_config(std::string_view name) {
  for (const NetworkConfig& cfg : config_registry()) {
    if (cfg.name == name) return &cfg;
  }
  return nullptr;
}

std::vector<SortVariant> bundled_variants() {
  std::vector<SortVariant> variants;
  for (Algorithm a : {Algorithm::merge_sort, Algorithm::quick_sort}) {
    for (const NetworkConfig& cfg : config_registry()) {
      variants.push_back(SortVariant{a, cfg});
    }
  }
  return variants;
}

}  // namespace netsort
