#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Division rounding toward negative infinity; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

// Canonical representative of a in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer s;
  Integer t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Rational floor(const Rational& q);

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace toric
