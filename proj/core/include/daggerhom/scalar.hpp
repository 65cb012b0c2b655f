#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace daggerhom {

// Exact scalars: elements of the fraction field F of a discrete valuation
// ring V with uniformiser p.  All field arithmetic is bit-exact; the prime
// p is a per-computation parameter, never a global.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// p-adic valuation nu(x): exponent of p in x.  Empty optional encodes
// +infinity, which happens exactly for x = 0.
std::optional<long> valuation(const Rational& x, const Integer& p);

// nu(x) == 0, i.e. x lies in the unit group V* = { x in V : |x| = 1 }.
bool is_unit(const Rational& x, const Integer& p);

// x lies in the modeled ring V, i.e. nu(x) >= 0.
bool in_ring(const Rational& x, const Integer& p);

// Parses "num/den" or "num"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Canonical rendering: "num" when den == 1, else "num/den".
std::string format_rational(const Rational& x);

// x^e for integer e (negative allowed when x != 0).
Rational pow_rational(const Rational& x, long e);

// Extended nonnegative rational used by the growth gauges; `infinite`
// models the +infinity value of gauges with support in the identity.
struct GaugeValue {
  bool infinite = false;
  Rational value;

  friend bool operator==(const GaugeValue&, const GaugeValue&) = default;
};

}  // namespace daggerhom
