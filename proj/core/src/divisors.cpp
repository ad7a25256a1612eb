#include "strata/divisors.hpp"

#include <stdexcept>

namespace strata {

HodgeDivisorClass zero_divisor_class(int g) {
  if (g < 2) throw std::domain_error("divisor class: g must be >= 2");
  return {g, 0, 0, std::vector<Rational>(g / 2 + 1, Rational(0))};
}

Rational kappa(const Partition& mu) {
  if (mu.size() == 0) throw std::domain_error("kappa: empty partition");
  Rational sum = 0;
  for (int m : mu.parts) sum += rational(static_cast<long>(m) * (m + 2), m + 1);
  return sum / 12;
}

HodgeDivisorClass stratum_divisor_interior(int g) {
  HodgeDivisorClass cls = zero_divisor_class(g);
  cls.psi = 6 * g - 6;
  cls.lambda = -24;
  return cls;
}

HodgeDivisorClass stratum_divisor_full(int g) {
  HodgeDivisorClass cls = stratum_divisor_interior(g);
  cls.delta[0] = 2;
  for (std::size_t i = 1; i < cls.delta.size(); ++i) cls.delta[i] = 3;
  return cls;
}

bool lambda_identity_check(int g) {
  HodgeDivisorClass lhs = zero_divisor_class(g);
  lhs.psi = rational(g - 1, 4);
  lhs.delta[0] = rational(1, 12);
  for (std::size_t i = 1; i < lhs.delta.size(); ++i) lhs.delta[i] = rational(1, 8);

  HodgeDivisorClass full = stratum_divisor_full(g);
  lhs.psi -= full.psi / 24;
  lhs.lambda -= full.lambda / 24;
  for (std::size_t i = 0; i < lhs.delta.size(); ++i) lhs.delta[i] -= full.delta[i] / 24;

  HodgeDivisorClass pure_lambda = zero_divisor_class(g);
  pure_lambda.lambda = 1;
  return lhs == pure_lambda;
}

Rational pair_intersection(const HodgeDivisorClass& cls, const TestCurveNumbers& curve) {
  if (cls.g != curve.g) throw std::domain_error("pair: genus mismatch");
  if (curve.delta.size() != cls.delta.size())
    throw std::domain_error("pair: delta vector length mismatch");
  Rational out = cls.psi * curve.psi + cls.lambda * curve.lambda;
  for (std::size_t i = 0; i < cls.delta.size(); ++i)
    out += cls.delta[i] * curve.delta[i];
  return out;
}

TestCurveNumbers plane_cubic_pencil() {
  return {3, 2, 3, {27, 0}};
}

}  // namespace strata
