#pragma once

#include "strata/graded_poly.hpp"
#include "strata/partition.hpp"

namespace strata {

// Rank-r Brill-Noether locus query on genus-g curves with the weighted
// marked-point divisor given by mu.
struct BNQuery {
  int g;
  Partition mu;
  int r;
};

// prod_{i=1}^{n} prod_{j=1}^{m_i} (1 + j omega_i), truncated at cap.
// generators.n must cover the parts of mu.
GradedPoly chern_F(const Partition& mu, const GeneratorSet& generators, int cap);

// Formal inverse of 1 + lambda_1 + ... + lambda_g, truncated at cap.
// No even-lambda reduction is applied.
GradedPoly chern_E_inverse(int g, int cap);

// Degeneracy-locus determinant: det of the q x q matrix with entries
// c_{p+j-i} taken from the graded parts of `series` (c_k = 0 for k < 0).
// Homogeneous of degree p*q; requires series.cap() >= p*q.
GradedPoly delta_pq(const GradedPoly& series, int p, int q);

// Expected class of BN^r_mu in the Chow ring of the open moduli space:
// Delta_{r, g-d+r}(c(F_mu)/c(E)), homogeneous of degree r*(g-d+r).
// Boundary classes are out of scope; no lambda reduction is applied.
GradedPoly bn_class(const BNQuery& query);

// Class of the stratum of canonical divisors with zero multiplicities mu:
// the degree-(g-1) part of c(F_mu)/c(E). Requires mu to sum to 2g-2.
GradedPoly stratum_class(int g, const Partition& mu);

}  // namespace strata
