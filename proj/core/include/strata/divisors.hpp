#pragma once

#include "strata/partition.hpp"
#include "strata/rational.hpp"

#include <vector>

namespace strata {

// Divisor class on the projectivized Hodge bundle over the compactified
// moduli space, in the basis {psi, lambda, delta_0..delta_{floor(g/2)}}.
// Projectivization parameterizes lines, so psi and lambda here are the
// opposites of the hyperplane-convention classes in the literature.
struct HodgeDivisorClass {
  int g;
  Rational psi;
  Rational lambda;
  std::vector<Rational> delta;  // size floor(g/2) + 1

  bool operator==(const HodgeDivisorClass&) const = default;
};

// Intersection numbers of a one-parameter test family against the same basis.
struct TestCurveNumbers {
  int g;
  Rational psi;
  Rational lambda;
  std::vector<Rational> delta;
};

HodgeDivisorClass zero_divisor_class(int g);

// (1/12) sum m_i (m_i + 2) / (m_i + 1). For the principal partition
// (1^{2g-2}) this is (g-1)/4.
Rational kappa(const Partition& mu);

// Class of the non-simple-zero divisor on the interior: (6g-6) psi - 24 lambda.
HodgeDivisorClass stratum_divisor_interior(int g);

// Full class including the boundary:
// (6g-6) psi - 24 lambda + 2 delta_0 + 3 sum_{i>=1} delta_i.
HodgeDivisorClass stratum_divisor_full(int g);

// Checks the identity
//   lambda = (g-1)/4 psi + 1/12 delta_0 + 1/8 sum delta_i
//            - 1/24 * stratum_divisor_full(g)
// as an exact vector identity in the basis.
bool lambda_identity_check(int g);

// Dot product of class coefficients with curve intersection numbers.
Rational pair_intersection(const HodgeDivisorClass& cls, const TestCurveNumbers& curve);

// The g=3 pencil-of-plane-cubics fixture: psi 2, lambda 3, delta_0 27, delta_1 0.
TestCurveNumbers plane_cubic_pencil();

}  // namespace strata
