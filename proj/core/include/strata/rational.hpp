#pragma once

#include <gmpxx.h>

#include <string>

namespace strata {

// Exact arbitrary-precision fraction, always canonical: lowest terms,
// positive denominator, zero is 0/1. Arithmetic never rounds.
using Rational = mpq_class;

// Canonicalized fraction num/den. den == 0 is a domain error.
Rational rational(long num, long den = 1);

// Accepts "p" or "p/q" with optional leading '-'.
Rational parse_rational(const std::string& text);

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Decimal approximation with the given number of digits, for display only.
std::string approx_string(const Rational& r, int digits = 6);

}  // namespace strata
