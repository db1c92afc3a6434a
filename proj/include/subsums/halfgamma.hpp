#pragma once

#include <string>

#include "subsums/rational.hpp"

namespace subsums {

// Gamma(n/2 + 1), the half-integer factorial used as the census/estimator
// null bound. Even n gives the exact integer (n/2)!; odd n gives the exact
// coefficient r with Gamma = r*sqrt(pi), evaluated through MPFR on demand.
struct HalfGamma {
  int n = 0;
  bool exact = false;
  Integer integer_value;  // set when exact
  Rational sqrtpi_coeff;  // set when !exact
};

HalfGamma gamma_half_factorial(int n);

// Fixed-point decimal with `decimals` digits after the point (>= 30
// significant digits for every n >= 1).
std::string gamma_decimal(const HalfGamma& g, int decimals = 30);

// One-decimal rendering matching the published census table: values below
// one truncate, larger ones round half away from zero.
std::string gamma_table_one_decimal(const HalfGamma& g);

// floor(x / Gamma(n/2+1)), exact. Odd n is resolved by interval refinement
// with directed rounding; the quotient is irrational for x != 0, so the
// floor is always determined.
Integer floor_quotient(const Integer& x, const HalfGamma& g);

// u / Gamma(n/2+1) with `decimals` digits after the point.
std::string ratio_decimal(const Integer& u, const HalfGamma& g, int decimals = 30);

// Published-table ratio: u divided by the one-decimal gamma rendering,
// truncated to two decimals.
std::string ratio_table(const Integer& u, const HalfGamma& g);

// Percentage rendering matching the published confidence tables: 100*v
// rounded to 13 decimal places (half to even) and printed with 14, the
// last always zero.
std::string percent_table_string(const Rational& v);

// Plain truncated fixed-point decimal of a rational.
std::string rational_decimal(const Rational& v, int decimals);

}  // namespace subsums
