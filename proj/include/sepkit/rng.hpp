#pragma once

// Deterministic random streams. Every stochastic operation in the library
// takes an explicit 64-bit seed and produces identical output on every
// platform. To guarantee that, the uniform and normal transforms are written
// out explicitly instead of going through <random> distributions, whose
// output is implementation-defined:
//
//   uniform: top 53 bits of mt19937_64 output, (x >> 11) * 2^-53 in [0, 1)
//   normal:  Box-Muller on two uniforms (the second deviate is cached)
//
// Independent streams are derived from (seed, stream) with splitmix64 mixing,
// so e.g. sample k of an ensemble can use Stream(seed, k) without correlating
// with its neighbors.

#include <cmath>
#include <cstdint>
#include <random>

#include "sepkit/types.hpp"

namespace sepkit {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(splitmix64(seed) + stream)) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // 1 - u keeps the argument of log strictly positive.
    const double radius = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double angle = 2.0 * kPi * uniform();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sepkit
