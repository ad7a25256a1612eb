#include "strata/graded_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

Monomial Monomial::generator(Generator gen, int exp) {
  if (exp < 0) throw std::domain_error("Monomial: negative exponent");
  Monomial m;
  if (exp > 0) m.factors_.push_back({gen, exp});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [gen, exp] : factors_) d += gen.degree() * exp;
  return d;
}

int Monomial::exponent(Generator gen) const {
  for (const auto& [g, exp] : factors_)
    if (g == gen) return exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(Generator gen) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != gen) out.factors_.push_back(f);
  return out;
}

GradedPoly::GradedPoly(int cap) : cap_(cap) {
  if (cap < 0) throw std::domain_error("GradedPoly: negative cap");
}

GradedPoly GradedPoly::constant(const Rational& c, int cap) {
  GradedPoly p(cap);
  p.add_term(Monomial{}, c);
  return p;
}

GradedPoly GradedPoly::generator(Generator gen, int cap) {
  GradedPoly p(cap);
  p.add_term(Monomial::generator(gen), 1);
  return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || m.degree() > cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_cap(const GradedPoly& a, const GradedPoly& b) {
  if (a.cap() != b.cap())
    throw std::domain_error("GradedPoly: cap mismatch");
}

GradedPoly add(const GradedPoly& a, const GradedPoly& b) {
  require_same_cap(a, b);
  GradedPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

GradedPoly sub(const GradedPoly& a, const GradedPoly& b) {
  require_same_cap(a, b);
  GradedPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

GradedPoly mul(const GradedPoly& a, const GradedPoly& b) {
  require_same_cap(a, b);
  GradedPoly out(a.cap());
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.degree();
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree() > out.cap()) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

GradedPoly scale(const GradedPoly& a, const Rational& c) {
  GradedPoly out(a.cap());
  for (const auto& [m, coef] : a.terms()) out.add_term(m, coef * c);
  return out;
}

GradedPoly pow(const GradedPoly& a, int k) {
  if (k < 0) throw std::domain_error("GradedPoly: negative power");
  GradedPoly out = GradedPoly::constant(1, a.cap());
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

GradedPoly series_inverse(const GradedPoly& f) {
  if (f.constant_term() != 1)
    throw std::domain_error("series_inverse: constant term must be 1");
  int cap = f.cap();
  std::vector<GradedPoly> f_part, h_part;
  for (int d = 0; d <= cap; ++d) f_part.push_back(graded_part(f, d));
  h_part.push_back(GradedPoly::constant(1, cap));
  // h_d = -sum_{k=1}^{d} f_k h_{d-k}
  for (int d = 1; d <= cap; ++d) {
    GradedPoly hd(cap);
    for (int k = 1; k <= d; ++k) hd = sub(hd, mul(f_part[k], h_part[d - k]));
    h_part.push_back(hd);
  }
  GradedPoly out(cap);
  for (const auto& hd : h_part) out = add(out, hd);
  return out;
}

GradedPoly graded_part(const GradedPoly& f, int d) {
  if (d < 0 || d > f.cap())
    throw std::domain_error("graded_part: degree out of range");
  GradedPoly out(f.cap());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) out.add_term(m, c);
  return out;
}

// lambda_{2k} = -(1/2) sum_{i=1}^{2k-1} (-1)^i lambda_i lambda_{2k-i}
static GradedPoly even_lambda_relation(int two_k, int cap) {
  GradedPoly rel(cap);
  for (int i = 1; i < two_k; ++i) {
    Rational c = (i % 2 == 0) ? rational(-1, 2) : rational(1, 2);
    rel.add_term(Monomial::generator(lambda_gen(i)) *
                     Monomial::generator(lambda_gen(two_k - i)),
                 c);
  }
  return rel;
}

GradedPoly reduce_lambda_even(const GradedPoly& f) {
  GradedPoly cur = f;
  for (;;) {
    int target = 0;
    for (const auto& [m, c] : cur.terms())
      for (const auto& [gen, exp] : m.factors())
        if (gen.kind == Generator::Lambda && gen.index % 2 == 0)
          target = std::max(target, gen.index);
    if (target == 0) return cur;
    // Substituting lambda_target only introduces lambdas of lower index.
    GradedPoly rel = even_lambda_relation(target, cur.cap());
    GradedPoly out(cur.cap());
    for (const auto& [m, c] : cur.terms()) {
      int e = m.exponent(lambda_gen(target));
      if (e == 0) {
        out.add_term(m, c);
        continue;
      }
      GradedPoly rest(cur.cap());
      rest.add_term(m.without(lambda_gen(target)), c);
      out = add(out, mul(rest, pow(rel, e)));
    }
    cur = out;
  }
}

}  // namespace strata
