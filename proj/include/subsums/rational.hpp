#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subsums {

// Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
// positive denominator) through arithmetic, so operator== is structural
// equality.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds a canonical rational from an integer pair; den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "p/q", a plain integer, or a finite decimal ("0.25" -> 1/4).
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "p/q" when den != 1, otherwise just "p".
std::string to_string(const Rational& r);

}  // namespace subsums
