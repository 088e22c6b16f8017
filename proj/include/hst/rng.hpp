#pragma once

#include <cstdint>
#include <vector>

namespace hst {

// Deterministic 64-bit generator with the splitmix64 update rule.  Every
// random choice in the library flows through this generator so that any
// implementation reproducing the recurrence reproduces the trees.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from {0, ..., bound-1} by modulo rejection.
  std::uint64_t below(std::uint64_t bound);

  // Uniform dyadic fraction with `bits` random bits (bits <= 53 for the
  // double variant).
  double unit_double();

 private:
  std::uint64_t state_;
};

// The splitmix64 output permutation applied to a single word.
std::uint64_t splitmix64_fin(std::uint64_t x);

// Seed derivation: child/trial streams are hash(parent seed, tag).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

// Partial Fisher-Yates: k distinct values from {0, ..., m-1}, in draw order.
std::vector<std::uint32_t> sample_without_replacement(std::uint32_t m,
                                                      std::uint32_t k,
                                                      SplitMix64& rng);

}  // namespace hst
