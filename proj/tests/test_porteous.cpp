#include "strata/format.hpp"
#include "strata/porteous.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace strata;

namespace {

// Signed sum over all q! permutations, independent of the cofactor expansion.
GradedPoly permutation_determinant(const GradedPoly& series, int p, int q) {
  int cap = series.cap();
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = i;
  GradedPoly det(cap);
  do {
    int inv = 0;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        if (perm[i] > perm[j]) ++inv;
    GradedPoly term = GradedPoly::constant(inv % 2 == 0 ? 1 : -1, cap);
    for (int i = 0; i < q; ++i) {
      int k = p + perm[i] - i;
      term = mul(term, k < 0 ? GradedPoly(cap) : graded_part(series, k));
    }
    det = add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

GradedPoly random_series(std::mt19937& rng, int cap) {
  std::uniform_int_distribution<int> nterms(1, 8), nfactors(0, 3), kind(0, 1),
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

TEST_CASE("chern_F") {
  GeneratorSet gens{3, 2};
  CHECK(chern_F(Partition({1, 1}), gens, 1) ==
        add(add(GradedPoly::constant(1, 1), GradedPoly::omega(1, 1)),
            GradedPoly::omega(2, 1)));
  GradedPoly f2 = chern_F(Partition({2}), gens, 2);
  GradedPoly want = GradedPoly::constant(1, 2);
  want.add_term(Monomial::generator(omega_gen(1)), 3);
  want.add_term(Monomial::generator(omega_gen(1), 2), 2);
  CHECK(f2 == want);
  // degree-1 coefficient of omega_i is m_i(m_i+1)/2
  for (const Partition& mu : {Partition({3, 2, 1}), Partition({4, 1, 1}), Partition({2, 2})}) {
    GradedPoly f = chern_F(mu, GeneratorSet{5, 3}, 1);
    for (int i = 0; i < mu.size(); ++i) {
      long m = mu.parts[i];
      CHECK(f.coefficient(Monomial::generator(omega_gen(i + 1))) ==
            rational(m * (m + 1), 2));
    }
  }
  CHECK_THROWS_AS(chern_F(Partition({1, 1, 1}), GeneratorSet{3, 2}, 1),
                  std::domain_error);
}

TEST_CASE("chern_E_inverse") {
  GradedPoly c1 = chern_E_inverse(4, 1);
  CHECK(c1 == sub(GradedPoly::constant(1, 1), GradedPoly::lambda(1, 1)));
  GradedPoly c2 = chern_E_inverse(4, 2);
  GradedPoly want = sub(GradedPoly::constant(1, 2), GradedPoly::lambda(1, 2));
  want.add_term(Monomial::generator(lambda_gen(1), 2), 1);
  want.add_term(Monomial::generator(lambda_gen(2)), -1);
  CHECK(c2 == want);
  GradedPoly reduced = reduce_lambda_even(c2);
  GradedPoly want_red = sub(GradedPoly::constant(1, 2), GradedPoly::lambda(1, 2));
  want_red.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
  CHECK(reduced == want_red);
}

TEST_CASE("delta_pq") {
  std::mt19937 rng(2358);
  // q = 1 selects c_p
  for (int trial = 0; trial < 20; ++trial) {
    GradedPoly s = random_series(rng, 4);
    int p = trial % 5;
    CHECK(delta_pq(s, p, 1) == graded_part(s, p));
  }
  // p=1, q=2: c_1^2 - c_0 c_2
  {
    GradedPoly s = random_series(rng, 2);
    GradedPoly want = sub(mul(graded_part(s, 1), graded_part(s, 1)),
                          mul(graded_part(s, 0), graded_part(s, 2)));
    CHECK(delta_pq(s, 1, 2) == want);
  }
  // q = 3 against the permutation oracle
  for (int trial = 0; trial < 30; ++trial) {
    GradedPoly s = random_series(rng, 6);
    CHECK(delta_pq(s, 2, 3) == permutation_determinant(s, 2, 3));
  }
  CHECK_THROWS_AS(delta_pq(random_series(rng, 2), 2, 3), std::domain_error);
  CHECK_THROWS_AS(delta_pq(random_series(rng, 2), -1, 2), std::domain_error);
  CHECK_THROWS_AS(delta_pq(random_series(rng, 2), 1, 0), std::domain_error);
}

TEST_CASE("bn_class examples") {
  auto logan = [](int g, const Partition& a) {
    GradedPoly want(1);
    want.add_term(Monomial::generator(lambda_gen(1)), -1);
    for (int i = 0; i < a.size(); ++i)
      want.add_term(Monomial::generator(omega_gen(i + 1)),
                    rational(static_cast<long>(a.parts[i]) * (a.parts[i] + 1), 2));
    return want;
  };
  CHECK(bn_class({3, Partition({2, 1}), 1}) == logan(3, Partition({2, 1})));
  CHECK(bn_class({2, Partition({1, 1}), 1}) == logan(2, Partition({1, 1})));
  CHECK(bn_class({4, Partition({2, 2}), 1}) == logan(4, Partition({2, 2})));
  CHECK(to_string(bn_class({3, Partition({2, 1}), 1})) == "-λ1 + 3ω1 + ω2");
  // homogeneity of degree r(g-d+r)
  GradedPoly cls = bn_class({4, Partition({1, 1}), 1});
  for (const auto& [m, c] : cls.terms()) CHECK(m.degree() == 3);
  CHECK_THROWS_AS(bn_class({3, Partition({3, 1}), 1}), std::domain_error);  // q < 1
}

TEST_CASE("stratum_class") {
  {
    GradedPoly want(1);
    want.add_term(Monomial::generator(omega_gen(1)), 3);
    want.add_term(Monomial::generator(lambda_gen(1)), -1);
    CHECK(stratum_class(2, Partition({2})) == want);
  }
  {
    GradedPoly want(1);
    want.add_term(Monomial::generator(omega_gen(1)), 1);
    want.add_term(Monomial::generator(omega_gen(2)), 1);
    want.add_term(Monomial::generator(lambda_gen(1)), -1);
    CHECK(stratum_class(2, Partition({1, 1})) == want);
  }
  {
    // g=3, mu=(2,2): brute-force product of the four linear factors times
    // the reduced Hodge series, then select degree 2.
    int cap = 2;
    GradedPoly prod = GradedPoly::constant(1, cap);
    for (int coeff : {1, 2}) {
      GradedPoly f1 = GradedPoly::constant(1, cap);
      f1.add_term(Monomial::generator(omega_gen(1)), coeff);
      GradedPoly f2 = GradedPoly::constant(1, cap);
      f2.add_term(Monomial::generator(omega_gen(2)), coeff);
      prod = mul(mul(prod, f1), f2);
    }
    GradedPoly hodge = GradedPoly::constant(1, cap);
    hodge.add_term(Monomial::generator(lambda_gen(1)), -1);
    hodge.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
    GradedPoly oracle = graded_part(mul(prod, hodge), 2);
    CHECK(reduce_lambda_even(stratum_class(3, Partition({2, 2}))) == oracle);
    GradedPoly want(cap);
    want.add_term(Monomial::generator(omega_gen(1), 2), 2);
    want.add_term(Monomial::generator(omega_gen(1)) * Monomial::generator(omega_gen(2)), 9);
    want.add_term(Monomial::generator(omega_gen(2), 2), 2);
    want.add_term(Monomial::generator(lambda_gen(1)) * Monomial::generator(omega_gen(1)), -3);
    want.add_term(Monomial::generator(lambda_gen(1)) * Monomial::generator(omega_gen(2)), -3);
    want.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
    CHECK(oracle == want);
  }
  CHECK_THROWS_WITH_AS(stratum_class(2, Partition({3})),
                       "stratum_class: not a partition of 2g-2", std::domain_error);
  // stratum_class agrees with bn_class at r = g-1
  for (int g = 2; g <= 5; ++g) {
    std::vector<Partition> mus;
    if (g == 2) mus = {Partition({2}), Partition({1, 1})};
    if (g == 3) mus = {Partition({4}), Partition({2, 2}), Partition({2, 1, 1})};
    if (g == 4) mus = {Partition({6}), Partition({3, 3}), Partition({2, 2, 1, 1})};
    if (g == 5) mus = {Partition({8}), Partition({4, 4}), Partition({2, 2, 2, 2})};
    for (const Partition& mu : mus)
      CHECK(stratum_class(g, mu) == bn_class({g, mu, g - 1}));
  }
}
