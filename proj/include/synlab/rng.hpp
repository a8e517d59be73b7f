#pragma once

#include <cstdint>

namespace synlab {

// splitmix64: deterministic across platforms, cheap to derive per-trial
// streams from.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at the ranges used
  // here (n far below 2^32).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return next() >> 63; }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return mix.next();
}

}  // namespace synlab
