#pragma once

#include <cstdint>

#include "subsums/rational.hpp"

namespace subsums {

// Counter-free splittable PRNG built on the splitmix64 finalizer. Streams
// derived from (seed, index) are independent and reproducible across
// platforms and thread counts; no stdlib distribution objects are used
// because their outputs are not pinned by the standard.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent stream keyed by (seed, index).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed) ^ mix(index * 0x9e3779b97f4a7c15ULL + 1));
  }

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform rational with numerator in [-num_span, num_span] and
  // denominator in [1, den_span].
  Rational rational(long num_span, long den_span) {
    long num = static_cast<long>(below(2 * num_span + 1)) - num_span;
    long den = static_cast<long>(below(den_span)) + 1;
    return make_rational(num, den);
  }
};

}  // namespace subsums
