#include "shadowlab/rational.hpp"

#include <gmp.h>

#include <cctype>
#include <ostream>
#include <sstream>

namespace shadowlab {

namespace {

void canonicalize(boost::multiprecision::mpq_rational& v) {
  mpq_canonicalize(v.backend().data());
}

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer in rational literal");
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  if (i == text.size()) throw ParseError("sign without digits in rational literal");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("invalid character in rational literal: '" +
                       std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw ParseError("rational with zero denominator");
  v_ = boost::multiprecision::mpq_rational(num, den);
  canonicalize(v_);
  if (denominator() < 0) {
    // mpq_canonicalize keeps the denominator positive; guard regardless.
    v_ = -v_;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (den < 0) throw ParseError("negative denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::string Rational::decimal(unsigned digits) const {
  BigInt num = numerator();
  const BigInt den = denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale(1);
  for (unsigned i = 0; i < digits; ++i) scale *= 10;

  // round(|x| * scale), half away from zero
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;

  std::string out = whole.str();
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(f.begin(), digits - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  if (negative && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

}  // namespace shadowlab
