#pragma once

#include <gmpxx.h>

#include <string>

namespace bochnerlab {

// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text);

Rational rat_pow(const Rational& base, unsigned long e);

// Falling factorial (a)_i = a(a-1)...(a-i+1).
Rational falling(const Rational& a, unsigned i);

Rational binomial(unsigned n, unsigned k);

}  // namespace bochnerlab
