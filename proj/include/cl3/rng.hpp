#pragma once
#include <cstdint>

namespace cl3 {

// Counter-based splitmix64. Every consumer derives its own stream from
// (seed, stream id), so sweep results do not depend on execution order or
// thread count, and identical seeds reproduce identical draws on any platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Independent substream for work item `id`.
  Rng stream(std::uint64_t id) const {
    return Rng(mix(state ^ (0x632be59bd9b4e019ull + id * 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

}  // namespace cl3
