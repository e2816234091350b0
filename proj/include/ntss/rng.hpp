#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace ntss {

/// Deterministic random source. Every randomized routine in the library takes
/// an explicit Rng (or a raw seed), so a run replays bit-identically from its
/// seed. Floating-point draws are derived straight from the engine words to
/// stay independent of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi). Degenerate intervals return lo.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  /// Seed for a child stream, decorrelated from this one by `salt`.
  std::uint64_t derive(std::uint64_t salt) {
    std::uint64_t z = base_ + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng with_base(std::uint64_t seed) {
    Rng r(seed);
    r.base_ = seed;
    return r;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t base_ = 0;
};

}  // namespace ntss
