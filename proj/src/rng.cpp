#include "hst/rng.hpp"

#include <numeric>

namespace hst {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Modulo rejection: discard the low tail that would bias the residue.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

double SplitMix64::unit_double() {
  return double(next() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64_fin(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64_fin(seed ^ splitmix64_fin(tag + 0x9E3779B97F4A7C15ULL));
}

std::vector<std::uint32_t> sample_without_replacement(std::uint32_t m,
                                                      std::uint32_t k,
                                                      SplitMix64& rng) {
  std::vector<std::uint32_t> v(m);
  std::iota(v.begin(), v.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + std::uint32_t(rng.below(m - i));
    std::swap(v[i], v[j]);
  }
  v.resize(k);
  return v;
}

}  // namespace hst
