#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hermite {

// Arbitrary-precision rational in canonical form (gcd 1, positive
// denominator). Every mpq_class arithmetic result is canonical; values built
// from raw numerator/denominator pairs must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& numerator, const Integer& denominator = 1);
Rational make_rational(long numerator, long denominator = 1);

// "p" or "p/q", the form accepted by parse_rational.
std::string to_string(const Rational& value);

// Accepts an optional sign, decimal digits and an optional "/digits" part.
std::optional<Rational> parse_rational(std::string_view text);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace hermite
