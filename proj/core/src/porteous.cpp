#include "strata/porteous.hpp"

#include <stdexcept>

namespace strata {

GradedPoly chern_F(const Partition& mu, const GeneratorSet& generators, int cap) {
  if (generators.n < mu.size())
    throw std::domain_error("chern_F: too few omega generators for mu");
  GradedPoly out = GradedPoly::constant(1, cap);
  for (int i = 0; i < mu.size(); ++i) {
    for (int j = 1; j <= mu.parts[i]; ++j) {
      GradedPoly factor = GradedPoly::constant(1, cap);
      factor.add_term(Monomial::generator(omega_gen(i + 1)), j);
      out = mul(out, factor);
    }
  }
  return out;
}

GradedPoly chern_E_inverse(int g, int cap) {
  if (g < 1) throw std::domain_error("chern_E_inverse: g must be >= 1");
  GradedPoly total = GradedPoly::constant(1, cap);
  for (int i = 1; i <= g && i <= cap; ++i)
    total.add_term(Monomial::generator(lambda_gen(i)), 1);
  return series_inverse(total);
}

GradedPoly delta_pq(const GradedPoly& series, int p, int q) {
  if (p < 0 || q < 1) throw std::domain_error("delta_pq: need p >= 0 and q >= 1");
  if (series.cap() < p * q) throw std::domain_error("delta_pq: insufficient cap");
  int cap = series.cap();
  auto entry = [&](int i, int j) {  // 0-based; c_{p + j - i}
    int k = p + j - i;
    if (k < 0) return GradedPoly(cap);
    if (k > cap) throw std::domain_error("delta_pq: insufficient cap");
    return graded_part(series, k);
  };
  std::vector<std::vector<GradedPoly>> m;
  for (int i = 0; i < q; ++i) {
    std::vector<GradedPoly> row;
    for (int j = 0; j < q; ++j) row.push_back(entry(i, j));
    m.push_back(std::move(row));
  }
  // Cofactor expansion along the first row; q = g - d + r is small.
  struct Det {
    int cap;
    GradedPoly run(const std::vector<std::vector<GradedPoly>>& a,
                   const std::vector<int>& cols, int row) {
      if (cols.size() == 1) return a[row][cols[0]];
      GradedPoly acc(cap);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t k = 0; k < cols.size(); ++k)
          if (k != j) rest.push_back(cols[k]);
        GradedPoly minor = run(a, rest, row + 1);
        GradedPoly term = mul(a[row][cols[j]], minor);
        acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
      }
      return acc;
    }
  };
  std::vector<int> cols;
  for (int j = 0; j < q; ++j) cols.push_back(j);
  return Det{cap}.run(m, cols, 0);
}

GradedPoly bn_class(const BNQuery& query) {
  if (query.g < 2) throw std::domain_error("bn_class: g must be >= 2");
  if (query.r < 1) throw std::domain_error("bn_class: r must be >= 1");
  if (query.mu.size() < 1) throw std::domain_error("bn_class: empty partition");
  int d = query.mu.sum();
  int q = query.g - d + query.r;
  if (q < 1) throw std::domain_error("bn_class: need g - d + r >= 1");
  int cap = query.r * q;
  GeneratorSet gens{query.g, query.mu.size()};
  GradedPoly series =
      mul(chern_F(query.mu, gens, cap), chern_E_inverse(query.g, cap));
  return delta_pq(series, query.r, q);
}

GradedPoly stratum_class(int g, const Partition& mu) {
  if (g < 2) throw std::domain_error("stratum_class: g must be >= 2");
  if (mu.sum() != 2 * g - 2)
    throw std::domain_error("stratum_class: not a partition of 2g-2");
  return bn_class({g, mu, g - 1});
}

}  // namespace strata
