#pragma once

#include <cstdint>

namespace cotrans {

// SplitMix64. Every randomized operation in the library draws from one of
// these, seeded explicitly, so runs are bit-reproducible across platforms.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  // Uniform integer in [lo, hi] by rejection; no modulo bias.
  constexpr std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) noexcept {
    const std::uint64_t span = hi - lo;
    if (span == max()) return next();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = max() - max() % range;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + x % range;
  }

 private:
  std::uint64_t state_;
};

// Seed for retry `attempt` of a seeded computation. Attempt 0 is the seed itself.
constexpr std::uint64_t derive_seed(std::uint64_t seed, unsigned attempt) noexcept {
  if (attempt == 0) return seed;
  SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * attempt));
  return mix.next();
}

}  // namespace cotrans
