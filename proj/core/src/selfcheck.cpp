#include "strata/selfcheck.hpp"

#include "strata/divisors.hpp"
#include "strata/format.hpp"
#include "strata/porteous.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace strata {
namespace {

using Rng = std::mt19937;

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return rational(num(rng), den(rng));
}

Monomial random_monomial(Rng& rng, int cap) {
  std::uniform_int_distribution<int> nfactors(0, 3), kind(0, 1), index(1, 3),
      exponent(1, 2);
  Monomial m;
  for (int i = 0; i < nfactors(rng); ++i) {
    Generator gen = kind(rng) == 0 ? lambda_gen(index(rng)) : omega_gen(index(rng));
    Monomial f = Monomial::generator(gen, exponent(rng));
    if ((m * f).degree() > cap) continue;
    m = m * f;
  }
  return m;
}

GradedPoly random_poly(Rng& rng, int cap, int max_terms = 8) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  GradedPoly p(cap);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(random_monomial(rng, cap), random_rational(rng));
  return p;
}

GradedPoly random_unit_series(Rng& rng, int cap) {
  GradedPoly p = random_poly(rng, cap);
  p.add_term(Monomial{}, Rational(1) - p.constant_term());
  return p;
}

// Independent determinant: signed sum over all permutations.
GradedPoly permutation_determinant(const std::vector<std::vector<GradedPoly>>& m,
                                   int cap) {
  int q = static_cast<int>(m.size());
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = i;
  GradedPoly det(cap);
  do {
    int inversions = 0;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        if (perm[i] > perm[j]) ++inversions;
    GradedPoly term = GradedPoly::constant(inversions % 2 == 0 ? 1 : -1, cap);
    for (int i = 0; i < q; ++i) term = mul(term, m[i][perm[i]]);
    det = add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Ordered partitions of total into at most max_parts positive parts.
void compositions(int total, int max_parts, std::vector<int>& prefix,
                  std::vector<Partition>& out) {
  if (total == 0) {
    if (!prefix.empty()) out.push_back(Partition(prefix));
    return;
  }
  if (static_cast<int>(prefix.size()) == max_parts) return;
  for (int part = 1; part <= total; ++part) {
    prefix.push_back(part);
    compositions(total - part, max_parts, prefix, out);
    prefix.pop_back();
  }
}

struct Checker {
  std::vector<CheckResult> results;
  bool pass = true;
  std::ostringstream fail;
  int checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      fail << what;
    }
  }

  void finish(const std::string& name, const std::string& anchor) {
    CheckResult r{name, anchor, pass, ""};
    r.detail = pass ? std::to_string(checked) + " identities hold" : fail.str();
    results.push_back(std::move(r));
    pass = true;
    fail.str("");
    checked = 0;
  }
};

void check_porteous_logan(Checker& c) {
  for (int g = 2; g <= 6; ++g) {
    std::vector<Partition> specs;
    std::vector<int> prefix;
    compositions(g, 4, prefix, specs);
    for (const Partition& a : specs) {
      GradedPoly got = bn_class({g, a, 1});
      GradedPoly want(got.cap());
      want.add_term(Monomial::generator(lambda_gen(1)), -1);
      for (int i = 0; i < a.size(); ++i)
        want.add_term(Monomial::generator(omega_gen(i + 1)),
                      rational(static_cast<long>(a.parts[i]) * (a.parts[i] + 1), 2));
      c.expect(got == want, "bn_class(g=" + std::to_string(g) + ", a=(" +
                                render_partition(a) + "), r=1) = " + to_string(got));
    }
  }
  c.finish("porteous-logan-agreement",
           "BN^1 class = -lambda_1 + sum a_i(a_i+1)/2 omega_i, modulo boundary");
}

void check_series_inverse(Checker& c) {
  GradedPoly inv = chern_E_inverse(5, 2);
  GradedPoly want(2);
  want.add_term(Monomial{}, 1);
  want.add_term(Monomial::generator(lambda_gen(1)), -1);
  want.add_term(Monomial::generator(lambda_gen(1), 2), 1);
  want.add_term(Monomial::generator(lambda_gen(2)), -1);
  c.expect(inv == want, "1/c(E) to degree 2 = " + to_string(inv));

  GradedPoly reduced = reduce_lambda_even(inv);
  GradedPoly want2(2);
  want2.add_term(Monomial{}, 1);
  want2.add_term(Monomial::generator(lambda_gen(1)), -1);
  want2.add_term(Monomial::generator(lambda_gen(1), 2), rational(1, 2));
  c.expect(reduced == want2, "reduced 1/c(E) to degree 2 = " + to_string(reduced));
  c.finish("hodge-series-inverse",
           "1/c(E) = 1 - lambda_1 + (lambda_1^2 - lambda_2) + ..., and "
           "lambda_2 = lambda_1^2/2");
}

void check_strata_divisor(Checker& c) {
  for (int g = 2; g <= 10; ++g) {
    HodgeDivisorClass full = stratum_divisor_full(g);
    c.expect(full.psi == 6 * g - 6 && full.lambda == -24 && full.delta[0] == 2,
             "full class leading coefficients, g=" + std::to_string(g));
    for (std::size_t i = 1; i < full.delta.size(); ++i)
      c.expect(full.delta[i] == 3, "full class delta_i, g=" + std::to_string(g));
    HodgeDivisorClass interior = stratum_divisor_interior(g);
    c.expect(interior.psi == 6 * g - 6 && interior.lambda == -24,
             "interior class, g=" + std::to_string(g));
    for (const Rational& d : interior.delta)
      c.expect(d == 0, "interior class has no boundary, g=" + std::to_string(g));
  }
  c.finish("strata-divisor-class",
           "(6g-6)psi - 24lambda + 2delta_0 + 3 sum delta_i");
}

void check_plane_cubic_pencil(Checker& c) {
  Rational got = pair_intersection(stratum_divisor_full(3), plane_cubic_pencil());
  c.expect(got == 6, "pencil pairing = " + to_string(got));
  c.finish("plane-cubic-pencil",
           "g=3 pencil (psi 2, lambda 3, delta_0 27) meets the divisor in 6 points");
}

void check_lambda_identity(Checker& c) {
  for (int g = 2; g <= 50; ++g)
    c.expect(lambda_identity_check(g), "lambda identity fails at g=" + std::to_string(g));
  c.finish("lambda-identity",
           "lambda = (g-1)/4 psi + 1/12 delta_0 + 1/8 sum delta_i - 1/24 * class");
}

// Algebraically distinct route: m(m+2)/(m+1) = m + 1 - 1/(m+1).
Rational kappa_oracle(const Partition& mu) {
  Rational sum = 0;
  for (int m : mu.parts) sum += Rational(m + 1) - rational(1, m + 1);
  return sum / 12;
}

void check_kappa(Checker& c) {
  for (int g = 2; g <= 20; ++g) {
    Partition principal = with_ones(Partition{}, 2 * g - 2);
    c.expect(kappa(principal) == rational(g - 1, 4),
             "kappa(1^{2g-2}) at g=" + std::to_string(g));
  }
  c.expect(kappa(Partition{2}) == rational(2, 9), "kappa((2))");
  c.expect(kappa(Partition{2, 1, 1}) == rational(17, 36), "kappa((2,1,1))");
  for (const Partition& mu :
       {Partition{2}, Partition{2, 1, 1}, Partition{3, 1}, Partition{4, 2, 2}})
    c.expect(kappa(mu) == kappa_oracle(mu),
             "kappa oracle disagrees on (" + render_partition(mu) + ")");
  c.finish("kappa-values", "kappa_mu = (1/12) sum m_i(m_i+2)/(m_i+1)");
}

void check_table_integrity(Checker& c, const std::vector<LyapunovRow>& table) {
  const auto& builtin = lyapunov_table();
  c.expect(table.size() == builtin.size(),
           "expected " + std::to_string(builtin.size()) + " rows, got " +
               std::to_string(table.size()));
  if (table.size() == builtin.size()) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& t = table[i];
      const auto& b = builtin[i];
      c.expect(t.g == b.g && t.a == b.a && t.mu == b.mu && t.L == b.L &&
                   t.kind == b.kind,
               "row " + row_name(b) + " differs from the compiled-in value (L " +
                   to_string(t.L) + " vs " + to_string(b.L) + ")");
    }
  }
  c.finish("lyapunov-table-integrity", "loaded dataset matches the compiled-in rows");
}

void check_certificates(Checker& c, const std::vector<LyapunovRow>& table) {
  for (const LyapunovRow& row : table) {
    Rational margin = row.L - rational(row.g, 2);
    c.expect(margin > 0, row_name(row) + ": L - g/2 = " + to_string(margin));
    BNDivisorSpec spec{row.g, row.a};
    c.expect(bn_ratio(spec, row.L) < 0, row_name(row) + ": ratio not negative");
    TeichCurve curve{row.g, row.mu, row.L, row.kind};
    bool slope_ok = slope_and_bounds(curve).ok;
    c.expect(slope_ok, row_name(row) + ": slope bound violated");
    if (!slope_ok || margin <= 0) continue;  // certify would reject this row
    ExtremalityReport report = certify(certify_input_from_row(row));
    c.expect(report.verdict == Verdict::NegativeExtremalCertified,
             row_name(row) + ": verdict " + to_string(report.verdict));
    bool wants_caveat = row.kind == LKind::StratumLimit;
    c.expect(wants_caveat == !report.caveats.empty(),
             row_name(row) + ": density caveat mismatch");
    c.expect(report.bound_d > 0, row_name(row) + ": non-positive margin d");
  }
  c.finish("lyapunov-certificates",
           "all eleven rows: L > g/2, negative ratio, certified verdict");
}

void check_g2_tightness(Checker& c) {
  TeichCurve curve{2, Partition{2}, rational(4, 3)};
  SlopeBounds b = slope_and_bounds(curve);
  c.expect(b.slope == 10 && b.slope_bound == 10, "slope " + to_string(b.slope));
  c.expect(curve.L == b.lyapunov_bound,
           "L bound " + to_string(b.lyapunov_bound));
  c.finish("g2-tightness",
           "g=2, mu=(2), L=4/3 saturates s(C) = 8 + 4/g and L = 3g/(g-1) kappa");
}

void check_determinant_oracle(Checker& c) {
  Rng rng(20240817);
  std::uniform_int_distribution<int> pick_q(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int q = pick_q(rng);
    std::uniform_int_distribution<int> pick_p(1, q == 1 ? 6 : (q == 2 ? 3 : 2));
    int p = pick_p(rng);
    int cap = std::min(6, p * q + 1);
    if (cap < p * q) cap = p * q;
    GradedPoly series = random_poly(rng, cap);
    std::vector<std::vector<GradedPoly>> m(q, std::vector<GradedPoly>(q, GradedPoly(cap)));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        int k = p + j - i;
        if (k >= 0 && k <= cap) m[i][j] = graded_part(series, k);
      }
    c.expect(delta_pq(series, p, q) == permutation_determinant(m, cap),
             "trial " + std::to_string(trial) + " (p=" + std::to_string(p) +
                 ", q=" + std::to_string(q) + ")");
  }
  c.finish("determinant-oracle",
           "cofactor determinant agrees with the permutation-sum expansion");
}

void check_properties(Checker& c) {
  Rng rng(6063);
  const int cap = 6;
  for (int trial = 0; trial < 60; ++trial) {
    GradedPoly a = random_poly(rng, cap), b = random_poly(rng, cap),
               d = random_poly(rng, cap);
    c.expect(mul(a, b) == mul(b, a), "mul commutativity");
    c.expect(mul(mul(a, b), d) == mul(a, mul(b, d)), "mul associativity");
    c.expect(mul(a, add(b, d)) == add(mul(a, b), mul(a, d)), "distributivity");
    // Truncation coherence: low graded parts only see low-degree inputs.
    std::uniform_int_distribution<int> pick_d(0, cap);
    int deg = pick_d(rng);
    GradedPoly a_low(deg), b_low(deg);
    for (const auto& [m, coef] : a.terms()) a_low.add_term(m, coef);
    for (const auto& [m, coef] : b.terms()) b_low.add_term(m, coef);
    GradedPoly lhs = graded_part(mul(a, b), deg);
    GradedPoly recut(deg);
    GradedPoly low_part = graded_part(mul(a_low, b_low), deg);
    for (const auto& [m, coef] : low_part.terms()) recut.add_term(m, coef);
    GradedPoly lhs_recap(deg);
    for (const auto& [m, coef] : lhs.terms()) lhs_recap.add_term(m, coef);
    c.expect(lhs_recap == recut, "truncation coherence at degree " + std::to_string(deg));
  }
  for (int trial = 0; trial < 40; ++trial) {
    GradedPoly f = random_unit_series(rng, cap);
    c.expect(mul(f, series_inverse(f)) == GradedPoly::constant(1, cap),
             "series inverse identity");
  }
  for (int trial = 0; trial < 40; ++trial) {
    GradedPoly a = random_poly(rng, cap), b = random_poly(rng, cap);
    GradedPoly ra = reduce_lambda_even(a);
    c.expect(ra == reduce_lambda_even(ra), "reduction idempotence");
    for (const auto& [m, coef] : ra.terms())
      for (const auto& [gen, exp] : m.factors())
        c.expect(!(gen.kind == Generator::Lambda && gen.index % 2 == 0),
                 "even lambda survives reduction");
    c.expect(reduce_lambda_even(mul(a, b)) ==
                 reduce_lambda_even(mul(ra, reduce_lambda_even(b))),
             "reduction ring-map property");
  }
  // bn_ratio sign iff L > g/2; chi invariance; s=0 consistency; monotonicity.
  std::uniform_int_distribution<int> pick_g(2, 5), num(1, 40), den(1, 12);
  for (int trial = 0; trial < 80; ++trial) {
    int g = pick_g(rng);
    std::vector<Partition> specs;
    std::vector<int> prefix;
    compositions(g, 4, prefix, specs);
    const Partition& a = specs[std::uniform_int_distribution<std::size_t>(
        0, specs.size() - 1)(rng)];
    BNDivisorSpec spec{g, a};
    Rational L = rational(num(rng), den(rng));
    c.expect((bn_ratio(spec, L) < 0) == (L > rational(g, 2)),
             "bn_ratio sign at L=" + to_string(L));
    Partition mu = with_ones(a, g - 2);
    Rational kap = kappa(mu);
    // keep L inside the admissible window so the curve data is consistent
    Rational L_ok = rational(3 * g, g - 1) * kap * rational(den(rng), den(rng) + num(rng) % 3 + 1);
    if (L_ok <= 0) L_ok = kap;
    TeichCurve c1{g, mu, L_ok, LKind::Exact, 1};
    TeichCurve c2{g, mu, L_ok, LKind::Exact, rational(num(rng), den(rng))};
    MgnDivisor d = bn_divisor(spec);
    c.expect(intersect_ratio(d, c1) == intersect_ratio(d, c2),
             "intersect_ratio depends on chi scale");
    c.expect(intersect_ratio(d, c1) == bn_ratio(spec, L_ok),
             "divisor route disagrees with bn_ratio");
    Rational eps = rational(num(rng), den(rng));
    c.expect(extremality_bound(spec, eps, 0) == bn_ratio(spec, rational(g, 2) + eps),
             "s=0 bound/ratio consistency");
    Rational eps2 = eps + rational(num(rng), den(rng));
    c.expect(extremality_bound(spec, eps2, 0) < extremality_bound(spec, eps, 0),
             "bound not decreasing in epsilon");
    Rational s1 = rational(num(rng), den(rng) * 100), s2 = s1 + rational(1, 50);
    c.expect(extremality_bound(spec, eps, s2) > extremality_bound(spec, eps, s1),
             "bound not increasing toward 0 in s");
  }
  c.finish("property-suite",
           "ring laws, truncation coherence, inversion, reduction, ratio and "
           "bound identities under randomized testing (fixed seeds)");
}

}  // namespace

std::vector<CheckResult> run_selfchecks(const std::vector<LyapunovRow>& table) {
  Checker c;
  check_porteous_logan(c);
  check_series_inverse(c);
  check_strata_divisor(c);
  check_plane_cubic_pencil(c);
  check_lambda_identity(c);
  check_kappa(c);
  check_certificates(c, table);
  check_g2_tightness(c);
  check_determinant_oracle(c);
  check_properties(c);
  check_table_integrity(c, table);
  return c.results;
}

}  // namespace strata
