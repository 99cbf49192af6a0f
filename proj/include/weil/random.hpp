#pragma once

#include <cstdint>
#include <random>

#include "weil/rational.hpp"

namespace weil {

/// Seeded generator for randomized suites. Range reduction is done here
/// rather than through <random> distributions, whose output is
/// implementation-defined; reports must be reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long int_in(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  bool chance(int numerator, int denominator) { return int_in(1, denominator) <= numerator; }

  /// Small rational a/b with |a| <= max_num, 1 <= b <= max_den.
  Rational small_rational(long max_num = 3, long max_den = 2) {
    Rational r(int_in(-max_num, max_num), int_in(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(long max_num = 3, long max_den = 2) {
    for (;;) {
      Rational r = small_rational(max_num, max_den);
      if (!is_zero(r)) return r;
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace weil
