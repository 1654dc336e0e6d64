#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "uxc/errors.hpp"

namespace uxc {

// Exact arbitrary-precision scalars. cpp_rational keeps gcd(num,den)=1 and
// den > 0 as class invariants; zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

// "a/b" or "a"; throws InvalidInputError on anything else.
inline Rational parse_rational(const std::string& s) {
  try {
    if (s.empty()) throw InvalidInputError("empty rational literal");
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw InvalidInputError("bad rational literal: '" + s + "'");
  }
}

// Canonical text form: "n" when the denominator is 1, "n/d" otherwise.
inline std::string rational_to_string(const Rational& q) { return q.str(); }

}  // namespace uxc
