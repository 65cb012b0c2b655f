#include "daggerhom/scalar.hpp"

#include <stdexcept>

namespace daggerhom {

namespace {

// Exponent of p in a nonzero integer.
long int_valuation(Integer n, const Integer& p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::optional<long> valuation(const Rational& x, const Integer& p) {
  if (p < 2) throw std::invalid_argument("valuation: prime must be >= 2");
  if (x == 0) return std::nullopt;
  Integer num = numerator(x), den = denominator(x);
  if (num < 0) num = -num;
  return int_valuation(num, p) - int_valuation(den, p);
}

bool is_unit(const Rational& x, const Integer& p) {
  auto v = valuation(x, p);
  return v.has_value() && *v == 0;
}

bool in_ring(const Rational& x, const Integer& p) {
  auto v = valuation(x, p);
  return !v.has_value() || *v >= 0;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("parse_rational: ") + e.what());
  }
}

std::string format_rational(const Rational& x) {
  Integer num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational pow_rational(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) throw std::domain_error("pow_rational: 0 to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                           : static_cast<unsigned long>(e);
  Rational acc(1), base = x;
  while (k) {
    if (k & 1ul) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) return Rational(1) / acc;
  return acc;
}

}  // namespace daggerhom
