// strata: exact intersection-theory calculations on the projectivized Hodge
// bundle and pointed moduli of curves. All arithmetic is exact rational;
// nothing is ever rounded unless --approx is requested.

#include "strata/divisors.hpp"
#include "strata/format.hpp"
#include "strata/partition.hpp"
#include "strata/porteous.hpp"
#include "strata/selfcheck.hpp"
#include "strata/teich.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace strata;

namespace {

struct Options {
  bool json_output = false;
  bool approx = false;
  std::string table_path;
};

struct Output {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> citations;
  std::vector<std::string> lines;
  int exit_code = 0;
};

std::string show(const Rational& r, const Options& opt) {
  std::string s = to_string(r);
  if (opt.approx && r.get_den() != 1)
    s += " (~" + approx_string(r) + ", inexact)";
  return s;
}

json poly_json(const GradedPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"monomial", to_string(m)}, {"coefficient", to_string(c)}});
  return {{"cap", p.cap()}, {"terms", terms}};
}

json divisor_class_json(const HodgeDivisorClass& cls) {
  json delta = json::array();
  for (const Rational& d : cls.delta) delta.push_back(to_string(d));
  return {{"g", cls.g},
          {"psi", to_string(cls.psi)},
          {"lambda", to_string(cls.lambda)},
          {"delta", delta}};
}

void emit(const Output& out, const Options& opt) {
  if (opt.json_output) {
    json doc = {{"command", out.command},
                {"inputs", out.inputs},
                {"result", out.result},
                {"citations", out.citations}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : out.lines) std::cout << line << "\n";
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list");
  return out;
}

std::vector<LyapunovRow> load_table(const Options& opt) {
  std::string path = opt.table_path;
  if (path.empty())
    if (const char* env = std::getenv("STRATA_LYAPUNOV_TABLE")) path = env;
  if (path.empty()) return lyapunov_table();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
  return parse_lyapunov_table(in);
}

const LyapunovRow* find_row(const std::vector<LyapunovRow>& table,
                            const std::string& name) {
  for (const auto& row : table)
    if (row_name(row) == name) return &row;
  return nullptr;
}

std::string kind_string(LKind k) {
  return k == LKind::Exact ? "exact" : "limit";
}

Output cmd_kappa(const std::string& mu_text, const Options& opt) {
  Output out;
  out.command = "kappa";
  Partition mu = parse_partition(mu_text);
  Rational k = kappa(mu);
  out.inputs["mu"] = render_partition(mu);
  out.result["kappa"] = to_string(k);
  out.citations = {"Eskin-Kontsevich-Zorich, Section 3.4"};
  out.lines = {"kappa(" + render_partition(mu) + ") = " + show(k, opt)};
  return out;
}

Output cmd_bn_class(int g, const std::string& mu_text, int r, bool reduce,
                    const Options& opt) {
  Output out;
  out.command = "bn-class";
  Partition mu = parse_partition(mu_text);
  GradedPoly cls = bn_class({g, mu, r});
  if (reduce) cls = reduce_lambda_even(cls);
  out.inputs = {{"g", g}, {"mu", render_partition(mu)}, {"r", r}, {"reduce", reduce}};
  out.result = poly_json(cls);
  out.result["degree"] = r * (g - mu.sum() + r);
  out.result["note"] = "expected class on the open moduli space, modulo boundary";
  out.lines = {"expected class of BN^" + std::to_string(r) + " (g=" +
                   std::to_string(g) + ", mu=(" + render_partition(mu) +
                   ")), modulo boundary:",
               to_string(cls)};
  return out;
}

Output cmd_stratum_class(int g, const std::string& mu_text, bool reduce,
                         const Options& opt) {
  Output out;
  out.command = "stratum-class";
  Partition mu = parse_partition(mu_text);
  GradedPoly cls = stratum_class(g, mu);
  if (reduce) cls = reduce_lambda_even(cls);
  out.inputs = {{"g", g}, {"mu", render_partition(mu)}, {"reduce", reduce}};
  out.result = poly_json(cls);
  out.result["degree"] = g - 1;
  out.lines = {"class of the stratum (g=" + std::to_string(g) + ", mu=(" +
                   render_partition(mu) + ")):",
               to_string(cls)};
  return out;
}

Output cmd_stratum_divisor(int g, bool interior, const Options& opt) {
  Output out;
  out.command = "stratum-divisor";
  HodgeDivisorClass cls =
      interior ? stratum_divisor_interior(g) : stratum_divisor_full(g);
  out.inputs = {{"g", g}, {"interior", interior}};
  out.result = divisor_class_json(cls);
  out.result["convention"] =
      "projectivization by lines; psi and lambda are the opposites of the "
      "hyperplane-convention classes";
  out.citations = {"Korotkin-Zograf, Theorem 2 (opposite sign convention)"};
  out.lines = {to_string(cls)};
  return out;
}

Output cmd_pair(int g, const std::string& curve_text, bool interior,
                const Options& opt) {
  Output out;
  out.command = "pair";
  std::vector<Rational> nums = parse_rational_list(curve_text);
  std::size_t expected = 2 + static_cast<std::size_t>(g / 2) + 1;
  if (nums.size() != expected)
    throw std::invalid_argument("--curve needs " + std::to_string(expected) +
                                " values for g=" + std::to_string(g) +
                                ": psi,lambda,delta0..delta" + std::to_string(g / 2));
  TestCurveNumbers curve{g, nums[0], nums[1],
                         std::vector<Rational>(nums.begin() + 2, nums.end())};
  HodgeDivisorClass cls =
      interior ? stratum_divisor_interior(g) : stratum_divisor_full(g);
  Rational value = pair_intersection(cls, curve);
  out.inputs = {{"g", g}, {"curve", curve_text}, {"interior", interior}};
  out.result = {{"class", divisor_class_json(cls)}, {"pairing", to_string(value)}};
  out.citations = {"Korotkin-Zograf, Theorem 2 (opposite sign convention)"};
  out.lines = {show(value, opt)};
  return out;
}

Output cmd_ratios(int g, const std::string& mu_text, const std::string& L_text,
                  const std::string& divisor_text, const Options& opt) {
  Output out;
  out.command = "ratios";
  Partition mu = parse_partition(mu_text);
  Rational L = parse_rational(L_text);
  TeichCurve curve{g, mu, L};
  CurveRatios ratios = curve_ratios(curve);
  out.inputs = {{"g", g}, {"mu", render_partition(mu)}, {"L", to_string(L)}};
  json omegas = json::array();
  for (const Rational& w : ratios.omega) omegas.push_back(to_string(w));
  out.result = {{"lambda", to_string(ratios.lambda)},
                {"delta0", to_string(ratios.delta0)},
                {"omega", omegas},
                {"unit", "chi/2"}};
  out.citations = {"Chen-Moeller, Proposition 4.8"};
  out.lines = {"intersection numbers per unit chi/2:",
               "C.lambda = " + show(ratios.lambda, opt),
               "C.delta0 = " + show(ratios.delta0, opt)};
  for (std::size_t i = 0; i < ratios.omega.size(); ++i)
    out.lines.push_back("C.omega" + std::to_string(i + 1) + " = " +
                        show(ratios.omega[i], opt));
  if (!divisor_text.empty()) {
    std::vector<Rational> coeffs = parse_rational_list(divisor_text);
    if (coeffs.size() < 2)
      throw std::invalid_argument("--divisor needs at least a and c coefficients");
    MgnDivisor d;
    d.a = coeffs.front();
    d.c = coeffs.back();
    d.b.assign(coeffs.begin() + 1, coeffs.end() - 1);
    Rational ratio = intersect_ratio(d, curve);
    out.inputs["divisor"] = divisor_text;
    out.result["ratio"] = to_string(ratio);
    out.lines.push_back("C.D / C.lambda = " + show(ratio, opt));
  }
  return out;
}

Output cmd_certify(const std::string& case_name, std::optional<int> g,
                   const std::string& a_text, const std::string& L_text,
                   const std::string& kind_text, const std::string& eps_text,
                   const std::string& s_text, const Options& opt) {
  Output out;
  out.command = "certify";
  CertifyInput input;
  if (!case_name.empty()) {
    auto table = load_table(opt);
    const LyapunovRow* row = find_row(table, case_name);
    if (!row) throw std::invalid_argument("unknown case '" + case_name + "'; see `strata table`");
    input = certify_input_from_row(*row);
    out.citations = {row->citation};
    out.inputs["case"] = case_name;
  } else {
    if (!g || a_text.empty() || L_text.empty())
      throw std::invalid_argument("certify needs --case, or --g, --a and --L");
    input.spec = {*g, parse_partition(a_text)};
    input.L = parse_rational(L_text);
    input.kind = kind_text == "limit" ? LKind::StratumLimit : LKind::Exact;
    input.from_table = false;
    input.name = "user:g" + std::to_string(*g) + "-(" +
                 render_partition(input.spec.a) + ")";
    out.inputs = {{"g", *g},
                  {"a", render_partition(input.spec.a)},
                  {"L", to_string(input.L)},
                  {"kind", kind_string(input.kind)}};
  }
  if (!eps_text.empty()) input.epsilon = parse_rational(eps_text);
  if (!s_text.empty()) input.s = parse_rational(s_text);
  out.inputs["epsilon"] = eps_text.empty() ? "L - g/2" : eps_text;
  out.inputs["s"] = to_string(input.s);

  ExtremalityReport report = certify(input);
  out.result = {{"case", report.case_name},
                {"bn_ratio", to_string(report.bn_ratio)},
                {"epsilon", to_string(report.epsilon)},
                {"bound_d", to_string(report.bound_d)},
                {"slope", to_string(report.slope)},
                {"slope_bound", to_string(report.slope_bound)},
                {"lyapunov_bound", to_string(report.lyapunov_bound)},
                {"verdict", to_string(report.verdict)},
                {"caveats", report.caveats}};
  out.lines = {"case: " + report.case_name,
               "bn ratio (C.BN / C.lambda): " + show(report.bn_ratio, opt),
               "epsilon: " + show(report.epsilon, opt),
               "certified margin d: " + show(report.bound_d, opt),
               "slope: " + show(report.slope, opt) + " (bound " +
                   show(report.slope_bound, opt) + ")",
               "Lyapunov bound: " + show(report.lyapunov_bound, opt),
               "verdict: " + to_string(report.verdict)};
  for (const auto& caveat : report.caveats) out.lines.push_back("caveat: " + caveat);
  return out;
}

Output cmd_table(const Options& opt) {
  Output out;
  out.command = "table";
  auto table = load_table(opt);
  json rows = json::array();
  for (const auto& row : table) {
    rows.push_back({{"name", row_name(row)},
                    {"divisor", row.divisor_name},
                    {"g", row.g},
                    {"a", render_partition(row.a)},
                    {"mu", render_partition(row.mu)},
                    {"L", to_string(row.L)},
                    {"kind", kind_string(row.kind)},
                    {"citation", row.citation}});
    out.citations.push_back(row.citation);
    out.lines.push_back(row_name(row) + ": g=" + std::to_string(row.g) + " a=(" +
                        render_partition(row.a) + ") mu=(" +
                        render_partition(row.mu) + ") L=" + show(row.L, opt) +
                        " [" + kind_string(row.kind) + "] -- " + row.citation);
  }
  out.result = {{"rows", rows}};
  return out;
}

Output cmd_verify(const Options& opt) {
  Output out;
  out.command = "verify";
  auto table = load_table(opt);
  auto checks = run_selfchecks(table);
  json rows = json::array();
  int failures = 0;
  for (const auto& check : checks) {
    rows.push_back({{"name", check.name},
                    {"anchor", check.anchor},
                    {"pass", check.pass},
                    {"detail", check.detail}});
    if (check.pass) {
      out.lines.push_back("PASS " + check.name + " -- " + check.anchor);
    } else {
      out.lines.push_back("FAIL " + check.name + " -- " + check.detail);
      ++failures;
    }
  }
  out.result = {{"checks", rows}, {"all_pass", failures == 0}};
  out.lines.push_back(failures == 0
                          ? "all " + std::to_string(checks.size()) + " checks passed"
                          : std::to_string(failures) + " check(s) failed");
  out.exit_code = failures == 0 ? 0 : 2;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection-theory toolkit for strata of abelian "
               "differentials and pointed Brill-Noether divisors"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable JSON output");
  app.add_flag("--approx", opt.approx,
               "append decimal approximations (marked inexact)");
  app.add_option("--table", opt.table_path,
                 "Lyapunov dataset file (default: built-in rows, or "
                 "$STRATA_LYAPUNOV_TABLE)");

  std::string mu_text, a_text, L_text, curve_text, divisor_text, case_name,
      kind_text = "exact", eps_text, s_text;
  int g = 0, r = 1;
  bool reduce = false, interior = false;

  auto* kappa_cmd = app.add_subcommand("kappa", "kappa_mu of a partition");
  kappa_cmd->add_option("--mu", mu_text, "partition, e.g. 2,1^4")->required();

  auto* bn_cmd = app.add_subcommand("bn-class", "expected Brill-Noether class");
  bn_cmd->add_option("--g", g)->required();
  bn_cmd->add_option("--mu", mu_text)->required();
  bn_cmd->add_option("--r", r)->required();
  bn_cmd->add_flag("--reduce", reduce, "eliminate even lambda classes");

  auto* sc_cmd = app.add_subcommand("stratum-class", "class of a stratum of canonical divisors");
  sc_cmd->add_option("--g", g)->required();
  sc_cmd->add_option("--mu", mu_text)->required();
  sc_cmd->add_flag("--reduce", reduce, "eliminate even lambda classes");

  auto* sd_cmd = app.add_subcommand("stratum-divisor",
                                    "class of the non-simple-zero divisor");
  sd_cmd->add_option("--g", g)->required();
  sd_cmd->add_flag("--interior", interior, "interior class (no boundary terms)");

  auto* pair_cmd = app.add_subcommand("pair", "pair the divisor class with a test curve");
  pair_cmd->add_option("--g", g)->required();
  pair_cmd->add_option("--curve", curve_text,
                       "intersection numbers psi,lambda,delta0,...")->required();
  pair_cmd->add_flag("--interior", interior, "pair the interior class instead");

  auto* ratios_cmd = app.add_subcommand("ratios",
                                        "Teichmueller-curve intersection ratios");
  ratios_cmd->add_option("--g", g)->required();
  ratios_cmd->add_option("--mu", mu_text)->required();
  ratios_cmd->add_option("--L", L_text, "sum of Lyapunov exponents, p/q")->required();
  ratios_cmd->add_option("--divisor", divisor_text,
                         "coefficients a,b1..bn,c of a*lambda + sum b_i omega_i + c*delta0");

  auto* certify_cmd = app.add_subcommand("certify", "extremality certificate");
  certify_cmd->add_option("--case", case_name, "table row name, e.g. W-g2");
  certify_cmd->add_option("--g", g);
  certify_cmd->add_option("--a", a_text, "weights summing to g");
  certify_cmd->add_option("--L", L_text);
  certify_cmd->add_option("--kind", kind_text)->check(CLI::IsMember({"exact", "limit"}));
  certify_cmd->add_option("--epsilon", eps_text, "margin, 0 < epsilon <= L - g/2");
  certify_cmd->add_option("--s", s_text, "ample perturbation size, >= 0");

  auto* table_cmd = app.add_subcommand("table", "the Lyapunov-sum dataset");
  auto* verify_cmd = app.add_subcommand("verify", "replay every built-in check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    Output out;
    if (kappa_cmd->parsed()) out = cmd_kappa(mu_text, opt);
    else if (bn_cmd->parsed()) out = cmd_bn_class(g, mu_text, r, reduce, opt);
    else if (sc_cmd->parsed()) out = cmd_stratum_class(g, mu_text, reduce, opt);
    else if (sd_cmd->parsed()) out = cmd_stratum_divisor(g, interior, opt);
    else if (pair_cmd->parsed()) out = cmd_pair(g, curve_text, interior, opt);
    else if (ratios_cmd->parsed()) out = cmd_ratios(g, mu_text, L_text, divisor_text, opt);
    else if (certify_cmd->parsed())
      out = cmd_certify(case_name, g > 0 ? std::optional<int>(g) : std::nullopt,
                        a_text, L_text, kind_text, eps_text, s_text, opt);
    else if (table_cmd->parsed()) out = cmd_table(opt);
    else if (verify_cmd->parsed()) out = cmd_verify(opt);
    emit(out, opt);
    return out.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
