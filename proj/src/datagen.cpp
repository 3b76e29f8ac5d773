#include "netsort/datagen.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace netsort {

std::string_view dist_name(Dist d) {
  switch (d) {
    case Dist::random: return "random";
    case Dist::sorted: return "sorted";
    case Dist::nearly_sorted: return "nearly_sorted";
  }
  return "random";
}

std::vector<std::int64_t> generate(const GenSpec& spec) {
  const double p = spec.distribution.perturbation;
  if (spec.distribution.kind == Dist::nearly_sorted && !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("perturbation must lie in [0, 1]");
  }

  std::vector<std::int64_t> out(spec.size);
  switch (spec.distribution.kind) {
    case Dist::random: {
      SplitMix64 rng(spec.seed);
      for (auto& v : out) v = static_cast<std::int64_t>(rng.next());
      break;
    }
    case Dist::sorted: {
      std::iota(out.begin(), out.end(), std::int64_t{0});
      break;
    }
    case Dist::nearly_sorted: {
      std::iota(out.begin(), out.end(), std::int64_t{0});
      std::size_t swaps =
          static_cast<std::size_t>(p * static_cast<double>(spec.size));
      if (swaps == 0 && spec.size >= 2 && p > 0.0) swaps = 1;
      SplitMix64 rng(spec.seed);
      for (std::size_t s = 0; s < swaps; ++s) {
        const std::size_t i = rng.next() % spec.size;
        const std::size_t j = rng.next() % spec.size;
        std::swap(out[i], out[j]);
      }
      break;
    }
  }
  return out;
}

}  // namespace netsort
