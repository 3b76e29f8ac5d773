#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace netsort {

enum class Dist { random, sorted, nearly_sorted };

std::string_view dist_name(Dist d);

// Input-generation mode. `perturbation` is the swap fraction for
// nearly_sorted and ignored otherwise; must lie in [0, 1].
struct Distribution {
  Dist kind = Dist::random;
  double perturbation = 0.01;
};

// Identical GenSpec gives a bit-identical sequence on every run and
// platform; the generator is SplitMix64 (see README for the exact rules).
struct GenSpec {
  std::size_t size = 0;
  Distribution distribution;
  std::uint64_t seed = 0;
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// random: full-range 64-bit words; sorted: 0..size-1; nearly_sorted: the
// sorted sequence after floor(perturbation*size) seeded index-pair swaps,
// at least one when size >= 2 and perturbation > 0.
std::vector<std::int64_t> generate(const GenSpec& spec);

}  // namespace netsort
