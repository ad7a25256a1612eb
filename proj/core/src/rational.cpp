#include "strata/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace strata {

Rational rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid(num) || !valid(den))
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  Rational r;
  if (r.set_str(num + "/" + den, 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string approx_string(const Rational& r, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << r.get_d();
  return out.str();
}

}  // namespace strata
