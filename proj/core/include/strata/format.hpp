#pragma once

#include "strata/divisors.hpp"
#include "strata/graded_poly.hpp"

#include <string>

namespace strata {

// "1", "λ1^2", "λ1ω2", ...
std::string to_string(const Monomial& m);

// Terms in canonical monomial order, e.g. "-λ1 + 3ω1 + ω2"; fractional
// coefficients are parenthesized: "(1/2)λ1^2".
std::string to_string(const GradedPoly& p);

// "12ψ - 24λ + 2δ0 + 3δ1", or "0" for the zero class.
std::string to_string(const HodgeDivisorClass& cls);

}  // namespace strata
