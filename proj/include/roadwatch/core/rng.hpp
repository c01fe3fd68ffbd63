#pragma once

#include <cstdint>

namespace roadwatch {

/// Counter-based deterministic random source. Every draw is a pure function
/// of (seed, stream, counter), so changing one consumer's draw pattern never
/// shifts the values seen by any other consumer. This keeps paired
/// experiment runs (e.g. before/after a propensity change) coupled on the
/// draws they share.
class CounterRng {
 public:
  CounterRng() = default;
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Derive a child source with an independent stream.
  CounterRng fork(std::uint64_t stream) const {
    return CounterRng(mix(seed_ ^ golden(stream)));
  }

  /// 64 uniform bits for the given counter tuple.
  std::uint64_t bits(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
    std::uint64_t x = seed_;
    x = mix(x ^ golden(a));
    x = mix(x ^ golden(b));
    x = mix(x ^ golden(c));
    return x;
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
    return static_cast<double>(bits(a, b, c) >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller on two decorrelated uniforms.
  double gaussian(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) const {
    return bits(a, b, c) % n;
  }

 private:
  static std::uint64_t golden(std::uint64_t x) {
    return x * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull;
  }

  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_ = 0;
};

}  // namespace roadwatch
