#pragma once

#include "strata/partition.hpp"
#include "strata/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace strata {

// Whether a Lyapunov-exponent sum is constant over all Teichmueller curves
// in its stratum, or the stratum-wide limit value.
enum class LKind { Exact, StratumLimit };

// A Teichmueller curve in the stratum with zero multiplicities mu,
// described by the data that enters intersection ratios. chi_half is the
// chi/2 scale; every public ratio is independent of it.
struct TeichCurve {
  int g;
  Partition mu;          // must sum to 2g-2
  Rational L;            // sum of Lyapunov exponents, > 0
  LKind kind = LKind::Exact;
  Rational chi_half = 1;  // > 0
};

// Intersection numbers in units of chi/2 (multiplied through by chi_half).
struct CurveRatios {
  Rational lambda;               // L
  Rational delta0;               // 12L - 12 kappa_mu
  std::vector<Rational> omega;   // 1/(m_i + 1) per part
};

CurveRatios curve_ratios(const TeichCurve& curve);

// Divisor class a*lambda + sum b_i omega_i + c*delta_0 + delta_other on the
// pointed moduli space. b_i pairs with the i-th marked zero (the i-th part
// of the curve's mu); delta_other never meets a Teichmueller curve and is
// kept as an inert marker.
struct MgnDivisor {
  Rational a;
  std::vector<Rational> b;
  Rational c;
  Rational delta_other_coeff = 0;  // inert; contributes 0 to every ratio
};

// (C.D)/(C.lambda) = a + sum b_i/((m_i+1)L) + c(12 - 12 kappa_mu / L).
Rational intersect_ratio(const MgnDivisor& divisor, const TeichCurve& curve);

// Pointed Brill-Noether divisor data: weights a with sum a_i = g.
struct BNDivisorSpec {
  int g;
  Partition a;
};

// -lambda + sum a_i(a_i+1)/2 omega_i - delta_other.
MgnDivisor bn_divisor(const BNDivisorSpec& spec);

// (C.BN)/(C.lambda) = -1 + g/(2L); negative iff L > g/2.
Rational bn_ratio(const BNDivisorSpec& spec, const Rational& L);

struct SlopeBounds {
  Rational slope;           // (12L - 12 kappa_mu)/L
  Rational slope_bound;     // 8 + 4/g
  Rational lyapunov_bound;  // 3g/(g-1) * kappa_mu
  bool ok;                  // slope <= slope_bound and L <= lyapunov_bound
};

SlopeBounds slope_and_bounds(const TeichCurve& curve);

// Upper bound for (C.BN)/(C.D_s) over curves with L >= g/2 + epsilon, where
// D_s is the perturbed ample class with |s_i| <= s:
//   -2e / ((g+2e)(1 + s(8 + 4/g + (2/g) sum 1/(a_i+1)))).
// The certified margin d is the negation of this value.
Rational extremality_bound(const BNDivisorSpec& spec, const Rational& epsilon,
                           const Rational& s);

enum class Verdict { NegativeExtremalCertified, NotNegative, HypothesisFlagged };

std::string to_string(Verdict v);

struct ExtremalityReport {
  std::string case_name;
  Rational bn_ratio;
  Rational epsilon;
  Rational bound_d;  // certified margin, > 0 when the certificate holds
  Rational slope;
  Rational slope_bound;
  Rational lyapunov_bound;
  Verdict verdict;
  std::vector<std::string> caveats;
};

// One record of the embedded Lyapunov-sum dataset.
struct LyapunovRow {
  int g;
  Partition a;   // weights, sum g
  Partition mu;  // (a, 1^{g-2})
  Rational L;
  LKind kind;
  std::string divisor_name;  // "W" or "BN^1_{g,a}"
  std::string citation;
};

// Stable short name, e.g. "W-g2" or "BN-3-21".
std::string row_name(const LyapunovRow& row);

// The eleven compiled-in rows.
const std::vector<LyapunovRow>& lyapunov_table();

// Parses the shipped table format: '|'-separated columns
// g | a | mu | L | kind | citation, '#' comments and blank lines skipped.
std::vector<LyapunovRow> parse_lyapunov_table(std::istream& in);

struct CertifyInput {
  BNDivisorSpec spec;
  Rational L;
  LKind kind = LKind::Exact;
  bool from_table = false;        // true when L comes from the shipped dataset
  std::string name;
  std::optional<Rational> epsilon;  // defaults to the full margin L - g/2
  Rational s = 0;
};

CertifyInput certify_input_from_row(const LyapunovRow& row);

ExtremalityReport certify(const CertifyInput& input);

}  // namespace strata
