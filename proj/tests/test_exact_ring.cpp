#include "strata/format.hpp"
#include "strata/graded_poly.hpp"
#include "strata/rational.hpp"

#include <doctest.h>

#include <random>

using namespace strata;

namespace {

GradedPoly lam(int i, int cap) { return GradedPoly::lambda(i, cap); }
GradedPoly om(int i, int cap) { return GradedPoly::omega(i, cap); }
GradedPoly one(int cap) { return GradedPoly::constant(1, cap); }

GradedPoly random_poly(std::mt19937& rng, int cap) {
  std::uniform_int_distribution<int> nterms(0, 8), nfactors(0, 3), kind(0, 1),
      index(1, 3), exponent(1, 2), num(-9, 9), den(1, 9);
  GradedPoly p(cap);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (int i = 0; i < nfactors(rng); ++i) {
      Generator gen = kind(rng) == 0 ? lambda_gen(index(rng)) : omega_gen(index(rng));
      Monomial f = Monomial::generator(gen, exponent(rng));
      if ((m * f).degree() <= cap) m = m * f;
    }
    p.add_term(m, rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(3, -6) == rational(-1, 2));
  CHECK(to_string(rational(-1, 24)) == "-1/24");
  CHECK(to_string(rational(6, 1)) == "6");
  CHECK(parse_rational("235761/93428") == rational(235761, 93428));
  CHECK(parse_rational("-7") == rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("4/3x"), std::invalid_argument);
  CHECK_THROWS_AS(rational(1, 0), std::domain_error);
  // canonical form: lowest terms, positive denominator
  Rational r = rational(4, -6);
  CHECK(r.get_num() == -2);
  CHECK(r.get_den() == 3);
}

TEST_CASE("add") {
  int cap = 2;
  CHECK(add(lam(1, cap), scale(lam(1, cap), -1)).is_zero());
  CHECK(add(one(cap) + om(1, cap), one(cap) + scale(om(1, cap), 2)) ==
        scale(one(cap), 2) + scale(om(1, cap), 3));
  GradedPoly f = mul(lam(1, cap), lam(1, cap)) - lam(2, cap);
  CHECK(add(f, lam(2, cap)) == mul(lam(1, cap), lam(1, cap)));
  CHECK_THROWS_AS(add(one(2), one(3)), std::domain_error);
}

TEST_CASE("mul with truncation") {
  {
    int cap = 2;
    GradedPoly p = mul(one(cap) + om(1, cap), one(cap) + scale(om(1, cap), 2));
    GradedPoly want = one(cap) + scale(om(1, cap), 3);
    want.add_term(Monomial::generator(omega_gen(1), 2), 2);
    CHECK(p == want);
  }
  {
    int cap = 1;
    GradedPoly p = mul(one(cap) + om(1, cap), one(cap) + scale(om(1, cap), 2));
    CHECK(p == one(cap) + scale(om(1, cap), 3));
  }
  // (1+w1)(1+2w1)(1+w2)(1+2w2) at cap 2, against a brute-force expansion
  // over all monomial pairs of the two quadratic factors.
  {
    int cap = 2;
    GradedPoly f1 = mul(one(cap) + om(1, cap), one(cap) + scale(om(1, cap), 2));
    GradedPoly f2 = mul(one(cap) + om(2, cap), one(cap) + scale(om(2, cap), 2));
    GradedPoly brute(cap);
    for (const auto& [m1, c1] : f1.terms())
      for (const auto& [m2, c2] : f2.terms())
        if (m1.degree() + m2.degree() <= cap) brute.add_term(m1 * m2, c1 * c2);
    GradedPoly want = one(cap) + scale(om(1, cap), 3) + scale(om(2, cap), 3);
    want.add_term(Monomial::generator(omega_gen(1), 2), 2);
    want.add_term(Monomial::generator(omega_gen(2), 2), 2);
    want.add_term(Monomial::generator(omega_gen(1)) * Monomial::generator(omega_gen(2)), 9);
    CHECK(mul(f1, f2) == want);
    CHECK(brute == want);
  }
}

TEST_CASE("series_inverse") {
  CHECK(series_inverse(one(3)) == one(3));
  {
    int cap = 2;
    GradedPoly inv = series_inverse(one(cap) + lam(1, cap));
    GradedPoly want = one(cap) - lam(1, cap);
    want.add_term(Monomial::generator(lambda_gen(1), 2), 1);
    CHECK(inv == want);
  }
  {
    int cap = 2;
    GradedPoly f = one(cap) + lam(1, cap) + lam(2, cap) + lam(3, cap);
    GradedPoly inv = series_inverse(f);
    GradedPoly want = one(cap) - lam(1, cap) - lam(2, cap);
    want.add_term(Monomial::generator(lambda_gen(1), 2), 1);
    CHECK(inv == want);
    CHECK(mul(f, inv) == one(cap));
  }
  CHECK_THROWS_AS(series_inverse(lam(1, 2)), std::domain_error);
  CHECK_THROWS_AS(series_inverse(scale(one(2), 2)), std::domain_error);
}

TEST_CASE("graded_part") {
  int cap = 2;
  GradedPoly p = one(cap) + scale(om(1, cap), 3);
  p.add_term(Monomial::generator(omega_gen(1), 2), 2);
  CHECK(graded_part(p, 1) == scale(om(1, cap), 3));
  CHECK(graded_part(p, 0) == one(cap));
  GradedPoly q = one(cap) - lam(1, cap);
  q.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
  GradedPoly want(cap);
  want.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
  CHECK(graded_part(q, 2) == want);
  CHECK_THROWS_AS(graded_part(p, 3), std::domain_error);
  CHECK_THROWS_AS(graded_part(p, -1), std::domain_error);
}

TEST_CASE("reduce_lambda_even") {
  {
    int cap = 2;
    GradedPoly want(cap);
    want.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
    CHECK(reduce_lambda_even(lam(2, cap)) == want);
    CHECK(reduce_lambda_even(lam(1, cap)) == lam(1, cap));
  }
  {
    // Oracle for lambda_4: expand c(E) c(E*) = 1 in degree 4 by brute force
    // over products lambda_i * (-1)^j lambda_j with i + j = 4 and solve.
    int cap = 4;
    GradedPoly deg4(cap);
    for (int i = 0; i <= 4; ++i) {
      int j = 4 - i;
      Monomial m;
      if (i > 0) m = m * Monomial::generator(lambda_gen(i));
      if (j > 0) m = m * Monomial::generator(lambda_gen(j));
      deg4.add_term(m, (j % 2 == 0) ? 1 : -1);
    }
    // deg4 = 2 lambda_4 - 2 lambda_1 lambda_3 + lambda_2^2 = 0, so
    // lambda_4 = lambda_1 lambda_3 - lambda_2^2 / 2; then reduce lambda_2.
    GradedPoly solved = scale(deg4 - scale(lam(4, cap), 2), rational(-1, 2));
    GradedPoly oracle = reduce_lambda_even(solved);
    GradedPoly want(cap);
    want.add_term(Monomial::generator(lambda_gen(1)) * Monomial::generator(lambda_gen(3)), 1);
    want.add_term(Monomial::generator(lambda_gen(1), 4), rational(-1, 8));
    CHECK(oracle == want);
    CHECK(reduce_lambda_even(lam(4, cap)) == want);
  }
}

TEST_CASE("ring properties (randomized, fixed seed)") {
  std::mt19937 rng(91);
  const int cap = 6;
  for (int trial = 0; trial < 50; ++trial) {
    GradedPoly a = random_poly(rng, cap), b = random_poly(rng, cap),
               c = random_poly(rng, cap);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    // every stored coefficient stays canonical
    GradedPoly ab = mul(a, b);
    for (const auto& [m, coef] : ab.terms()) {
      CHECK(coef != 0);
      CHECK(coef.get_den() > 0);
      CHECK(m.degree() <= cap);
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    GradedPoly f = random_poly(rng, cap);
    f.add_term(Monomial{}, Rational(1) - f.constant_term());
    CHECK(mul(f, series_inverse(f)) == GradedPoly::constant(1, cap));
  }
  for (int trial = 0; trial < 30; ++trial) {
    GradedPoly a = random_poly(rng, cap), b = random_poly(rng, cap);
    GradedPoly ra = reduce_lambda_even(a), rb = reduce_lambda_even(b);
    CHECK(ra == reduce_lambda_even(ra));
    CHECK(reduce_lambda_even(mul(a, b)) == reduce_lambda_even(mul(ra, rb)));
  }
}

TEST_CASE("rendering") {
  int cap = 2;
  GradedPoly p(cap);
  p.add_term(Monomial::generator(lambda_gen(1)), -1);
  p.add_term(Monomial::generator(omega_gen(1)), 3);
  p.add_term(Monomial::generator(omega_gen(2)), 1);
  CHECK(to_string(p) == "-λ1 + 3ω1 + ω2");
  GradedPoly q(cap);
  q.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
  CHECK(to_string(q) == "(1/2)λ1^2");
  CHECK(to_string(GradedPoly(cap)) == "0");
}
