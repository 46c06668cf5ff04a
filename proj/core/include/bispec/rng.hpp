#pragma once

#include <cstdint>

namespace bispec {

/// splitmix64: tiny fully-specified generator, identical output everywhere.
/// Used wherever reproducibility is part of the contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.  Modulo bias is irrelevant at the tiny
  /// ranges used here.
  long next_in_range(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Stable per-item seed derived from a base seed and an index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return g.next();
}

}  // namespace bispec
