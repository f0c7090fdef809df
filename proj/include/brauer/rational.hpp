#pragma once

#include <gmpxx.h>

#include <string>

namespace brauer {

// Exact arbitrary-precision carriers. Every certified value in this library
// is a Rational (or an integer); floating point only ever appears as an
// outward-rounded display or enclosure endpoint.
using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "a" or "a/b" (optional leading '-'); throws std::invalid_argument
// on malformed input or zero denominator. Result is canonical.
Rational parse_rational(const std::string& text);

// Canonical "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& q);

BigInt ceil_rational(const Rational& q);
BigInt floor_rational(const Rational& q);

// base^e with an integer exponent; base must be nonzero when e < 0.
Rational pow_rational(const Rational& base, long e);

// True iff q == 2^m for some integer m (q must be canonical and positive).
bool is_power_of_two(const Rational& q, long& m);

}  // namespace brauer
