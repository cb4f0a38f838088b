#pragma once

#include <cstdint>

#include "liexp/rational.hpp"

namespace liexp {

/// splitmix64; deterministic across platforms, used for seeded generic
/// elements and test instance generation.
class Prng {
public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Small integer in [-25, 25].
  long small_int() { return static_cast<long>(below(51)) - 25; }

  /// Small nonzero integer.
  long small_nonzero() {
    long v = small_int();
    return v == 0 ? 1 : v;
  }

  Rational small_rational() {
    long n = small_int();
    long d = static_cast<long>(below(4)) + 1;
    return Rational(n, d);
  }

private:
  std::uint64_t state_;
};

}  // namespace liexp
