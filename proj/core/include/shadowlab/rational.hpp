#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "shadowlab/errors.hpp"

namespace shadowlab {

using BigInt = boost::multiprecision::mpz_int;

/**
 * Exact rational scalar.
 *
 * Every value is kept in canonical form: positive denominator,
 * gcd(|numerator|, denominator) = 1. All arithmetic is exact; there is no
 * floating-point fallback anywhere in the core. The decimal() renderer is a
 * display-only convenience for CSV/SVG output.
 *
 * The underlying storage is a GMP rational. The wrapper exists because raw
 * GMP rationals constructed from strings or numerator/denominator pairs are
 * not canonicalized automatically, which would break exact comparison.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // implicit: integers embed into the rationals
  Rational(long long n) : v_(static_cast<long>(n)) {}
  explicit Rational(const BigInt& n) : v_(n) {}

  /// num/den, canonicalized; den must be nonzero.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den)
      : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p" or "p/q" with optional leading minus sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  /// -1, 0 or +1.
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(wrap{}, -v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Nonnegative integer power.
  Rational pow(unsigned exponent) const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Canonical text form "p/q"; the "/q" is omitted when q = 1.
  std::string str() const;

  /// Display-only decimal rendering, `digits` fractional digits, rounded
  /// half away from zero, trailing zeros trimmed.
  std::string decimal(unsigned digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct wrap {};  // tag: value already canonical
  Rational(wrap, boost::multiprecision::mpq_rational v) : v_(std::move(v)) {}

  boost::multiprecision::mpq_rational v_;
};

/// Midpoint of two rationals.
inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / 2;
}

}  // namespace shadowlab
