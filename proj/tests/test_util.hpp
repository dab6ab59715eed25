#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "shadowlab/linalg.hpp"

namespace shadowlab::testutil {

/// Deterministic small-rational source for property-style tests.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  /// Numerator in [-bound, bound], denominator in [1, bound].
  Rational next(int bound = 9) {
    const long long num =
        static_cast<long long>(rng_() % (2 * bound + 1)) - bound;
    const long long den = static_cast<long long>(rng_() % bound) + 1;
    return Rational(num, den);
  }

  Rational next_nonzero(int bound = 9) {
    while (true) {
      Rational r = next(bound);
      if (!r.is_zero()) return r;
    }
  }

  RatVector next_vector(std::size_t n, int bound = 9) {
    std::vector<Rational> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(next(bound));
    return RatVector(std::move(xs));
  }

  RatMatrix next_matrix(std::size_t n, int bound = 9) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = next(bound);
    return m;
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace shadowlab::testutil
