#pragma once

#include <cstdint>

#include "multifan/rational.hpp"

namespace multifan {

// Deterministic splitmix64 stream. Hand-rolled (not std::uniform_int_distribution)
// so sampled values are identical across standard-library implementations,
// which keeps serialized outputs byte-stable for a given seed.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], endpoints included. Rejection sampling, unbiased.
  int64_t uniformInt(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return lo + static_cast<int64_t>(draw % span);
  }

  /// Uniform grid point in [lo, hi] with the given power-of-two resolution.
  Rational uniformRational(const Rational& lo, const Rational& hi, int bits = 30) {
    int64_t steps = int64_t(1) << bits;
    int64_t k = uniformInt(0, steps - 1);
    return lo + (hi - lo) * Rational(k, steps);
  }

  /// Independent child stream; deterministic function of (master, stream id).
  static uint64_t deriveSeed(uint64_t master, uint64_t stream) {
    Rng mix(master ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
    return mix.next();
  }

private:
  uint64_t state_;
};

}  // namespace multifan
