#include "strata/format.hpp"

namespace strata {

std::string to_string(const Monomial& m) {
  if (m.factors().empty()) return "1";
  std::string out;
  for (const auto& [gen, exp] : m.factors()) {
    out += (gen.kind == Generator::Lambda ? "λ" : "ω");
    out += std::to_string(gen.index);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

static std::string coefficient_prefix(const Rational& c, bool unit_monomial) {
  Rational abs = c < 0 ? Rational(-c) : c;
  if (abs == 1 && !unit_monomial) return "";
  std::string s = to_string(abs);
  if (abs.get_den() != 1 && !unit_monomial) return "(" + s + ")";
  return s;
}

std::string to_string(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    bool unit = m.factors().empty();
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += coefficient_prefix(c, unit);
    if (!unit) out += to_string(m);
  }
  return out;
}

std::string to_string(const HodgeDivisorClass& cls) {
  std::string out;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (abs != 1) {
      std::string s = to_string(abs);
      out += abs.get_den() == 1 ? s : "(" + s + ")";
    }
    out += name;
  };
  emit(cls.psi, "ψ");
  emit(cls.lambda, "λ");
  for (std::size_t i = 0; i < cls.delta.size(); ++i)
    emit(cls.delta[i], "δ" + std::to_string(i));
  return out.empty() ? "0" : out;
}

}  // namespace strata
