#include "strata/teich.hpp"

#include "strata/divisors.hpp"

#include <stdexcept>

namespace strata {

static void check_curve(const TeichCurve& curve) {
  if (curve.g < 2) throw std::domain_error("teich: g must be >= 2");
  if (curve.mu.sum() != 2 * curve.g - 2)
    throw std::domain_error("teich: mu must be a partition of 2g-2");
  if (curve.L <= 0) throw std::domain_error("teich: L must be > 0");
  if (curve.chi_half <= 0) throw std::domain_error("teich: chi_half must be > 0");
}

CurveRatios curve_ratios(const TeichCurve& curve) {
  check_curve(curve);
  CurveRatios out;
  Rational k = kappa(curve.mu);
  out.lambda = curve.chi_half * curve.L;
  out.delta0 = curve.chi_half * (12 * curve.L - 12 * k);
  for (int m : curve.mu.parts)
    out.omega.push_back(curve.chi_half * rational(1, m + 1));
  return out;
}

Rational intersect_ratio(const MgnDivisor& divisor, const TeichCurve& curve) {
  check_curve(curve);
  if (static_cast<int>(divisor.b.size()) > curve.mu.size())
    throw std::domain_error("intersect_ratio: more omega coefficients than marked zeros");
  Rational out = divisor.a;
  for (std::size_t i = 0; i < divisor.b.size(); ++i)
    out += divisor.b[i] / ((curve.mu.parts[i] + 1) * curve.L);
  out += divisor.c * (12 - 12 * kappa(curve.mu) / curve.L);
  return out;
}

static void check_spec(const BNDivisorSpec& spec) {
  if (spec.g < 2) throw std::domain_error("bn divisor: g must be >= 2");
  if (spec.a.size() < 1 || spec.a.sum() != spec.g)
    throw std::domain_error("bn divisor: weights must sum to g");
}

MgnDivisor bn_divisor(const BNDivisorSpec& spec) {
  check_spec(spec);
  MgnDivisor d;
  d.a = -1;
  for (int ai : spec.a.parts)
    d.b.push_back(rational(static_cast<long>(ai) * (ai + 1), 2));
  d.c = 0;
  d.delta_other_coeff = -1;
  return d;
}

Rational bn_ratio(const BNDivisorSpec& spec, const Rational& L) {
  check_spec(spec);
  if (L <= 0) throw std::domain_error("bn_ratio: L must be > 0");
  return Rational(-1) + Rational(spec.g) / (2 * L);
}

SlopeBounds slope_and_bounds(const TeichCurve& curve) {
  check_curve(curve);
  SlopeBounds out;
  Rational k = kappa(curve.mu);
  out.slope = (12 * curve.L - 12 * k) / curve.L;
  out.slope_bound = Rational(8) + rational(4, curve.g);
  out.lyapunov_bound = rational(3 * curve.g, curve.g - 1) * k;
  out.ok = out.slope <= out.slope_bound && curve.L <= out.lyapunov_bound;
  return out;
}

Rational extremality_bound(const BNDivisorSpec& spec, const Rational& epsilon,
                           const Rational& s) {
  check_spec(spec);
  if (epsilon < 0 || s < 0)
    throw std::domain_error("extremality_bound: epsilon and s must be >= 0");
  Rational inv_sum = 0;
  for (int ai : spec.a.parts) inv_sum += rational(1, ai + 1);
  Rational ample_term =
      Rational(1) + s * (Rational(8) + rational(4, spec.g) +
                         rational(2, spec.g) * inv_sum);
  return (-2 * epsilon) / ((spec.g + 2 * epsilon) * ample_term);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NegativeExtremalCertified: return "negative-extremal-certified";
    case Verdict::NotNegative: return "not-negative";
    case Verdict::HypothesisFlagged: return "hypothesis-flagged";
  }
  return "unknown";
}

CertifyInput certify_input_from_row(const LyapunovRow& row) {
  CertifyInput in;
  in.spec = {row.g, row.a};
  in.L = row.L;
  in.kind = row.kind;
  in.from_table = true;
  in.name = row_name(row);
  return in;
}

ExtremalityReport certify(const CertifyInput& input) {
  check_spec(input.spec);
  if (input.L <= 0) throw std::domain_error("certify: L must be > 0");
  int g = input.spec.g;
  TeichCurve curve{g, with_ones(input.spec.a, g - 2), input.L, input.kind};
  SlopeBounds bounds = slope_and_bounds(curve);
  if (!bounds.ok)
    throw std::domain_error("certify: L is inconsistent with the slope bound for this stratum");

  Rational full_margin = input.L - rational(g, 2);
  Rational eps = input.epsilon.value_or(full_margin);
  if (input.epsilon && (*input.epsilon <= 0 || *input.epsilon > full_margin))
    throw std::domain_error("certify: epsilon must satisfy 0 < epsilon <= L - g/2");

  ExtremalityReport report;
  report.case_name = input.name;
  report.bn_ratio = bn_ratio(input.spec, input.L);
  report.epsilon = eps;
  report.slope = bounds.slope;
  report.slope_bound = bounds.slope_bound;
  report.lyapunov_bound = bounds.lyapunov_bound;

  if (full_margin <= 0) {
    report.bound_d = 0;
    report.verdict = Verdict::NotNegative;
    report.caveats.push_back("L <= g/2: the Brill-Noether ratio is not negative");
    return report;
  }

  report.bound_d = -extremality_bound(input.spec, eps, input.s);
  report.verdict = input.from_table ? Verdict::NegativeExtremalCertified
                                    : Verdict::HypothesisFlagged;
  if (input.kind == LKind::StratumLimit)
    report.caveats.push_back(
        "L is the stratum-wide limit; the certificate relies on a Zariski-dense "
        "family of curves with L >= g/2 + epsilon");
  if (!input.from_table)
    report.caveats.push_back(
        "user-supplied L: Zariski density of the certifying family is assumed, "
        "not verified");
  return report;
}

}  // namespace strata
