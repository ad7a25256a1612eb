#pragma once

#include "strata/rational.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace strata {

// Generators of the graded ring: lambda_i (degree i) and omega_i (degree 1).
// Lambdas order before omegas, each kind by ascending index.
struct Generator {
  enum Kind { Lambda, Omega };
  Kind kind;
  int index;  // 1-based

  int degree() const { return kind == Lambda ? index : 1; }
  auto operator<=>(const Generator&) const = default;
};

inline Generator lambda_gen(int i) { return {Generator::Lambda, i}; }
inline Generator omega_gen(int i) { return {Generator::Omega, i}; }

// Declares which generators exist: lambda_1..lambda_g and omega_1..omega_n.
struct GeneratorSet {
  int g = 0;
  int n = 0;
};

// Power product of generators; factors are sorted and exponents positive,
// so structural equality is monomial equality and operator<=> is the
// canonical total order on monomials.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial

  static Monomial generator(Generator gen, int exp = 1);

  int degree() const;
  int exponent(Generator gen) const;
  const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  // Monomial with all factors of `gen` removed.
  Monomial without(Generator gen) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<Generator, int>> factors_;
};

// Sparse polynomial over Rational, truncated at a fixed total degree `cap`:
// terms of higher degree are discarded on construction and in every product.
class GradedPoly {
 public:
  explicit GradedPoly(int cap);

  static GradedPoly constant(const Rational& c, int cap);
  static GradedPoly generator(Generator gen, int cap);
  static GradedPoly lambda(int i, int cap) { return generator(lambda_gen(i), cap); }
  static GradedPoly omega(int i, int cap) { return generator(omega_gen(i), cap); }

  int cap() const { return cap_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  // Adds c * m, dropping the term if its degree exceeds cap or the
  // resulting coefficient is zero.
  void add_term(const Monomial& m, const Rational& c);

  bool operator==(const GradedPoly&) const = default;

 private:
  std::map<Monomial, Rational> terms_;
  int cap_;
};

// Both operands must share the same cap (domain error otherwise).
GradedPoly add(const GradedPoly& a, const GradedPoly& b);
GradedPoly sub(const GradedPoly& a, const GradedPoly& b);
GradedPoly mul(const GradedPoly& a, const GradedPoly& b);
GradedPoly scale(const GradedPoly& a, const Rational& c);
GradedPoly pow(const GradedPoly& a, int k);

inline GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) { return add(a, b); }
inline GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return sub(a, b); }
inline GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return mul(a, b); }

// Multiplicative inverse up to cap; f must have constant term 1.
GradedPoly series_inverse(const GradedPoly& f);

// Sum of the terms of exact degree d; 0 <= d <= f.cap().
GradedPoly graded_part(const GradedPoly& f, int d);

// Eliminates every even-indexed lambda generator via the degree-2k
// consequences of c(E) c(E*) = 1:
//   lambda_{2k} = -(1/2) sum_{i=1}^{2k-1} (-1)^i lambda_i lambda_{2k-i},
// which for k = 1 is lambda_2 = lambda_1^2 / 2. Odd lambdas are untouched.
GradedPoly reduce_lambda_even(const GradedPoly& f);

}  // namespace strata
