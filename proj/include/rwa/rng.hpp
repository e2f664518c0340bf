#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace rwa {

/// Seeded 64-bit generator. Satisfies UniformRandomBitGenerator so it can
/// drive <random> distributions, and exposes a fixed 53-bit uniform mapping
/// so our own samplers do not depend on the standard library's choice.
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream `index` derived from `root`: the engine is seeded with
  /// splitmix64(root + index). Stream 0 is the single-stream generator.
  static Rng stream(std::uint64_t root, std::uint64_t index) { return Rng(splitmix64(root + index)); }

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1).
  double uniform_open() {
    for (;;) {
      double u = uniform();
      if (u > 0.0) return u;
    }
  }

  static constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace rwa
