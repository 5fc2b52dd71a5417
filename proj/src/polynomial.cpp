#include "lieindex/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lieindex {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rational(1));
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (uint32_t e : m) t += static_cast<int>(e);
    d = std::max(d, t);
  }
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& s) const {
  Poly r(nvars_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& dlead = *d.terms_.rbegin();  // lex-leading term
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Monomial qm(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      if (rlead.first[i] < dlead.first[i])
        throw std::domain_error("inexact polynomial division");
      qm[i] = rlead.first[i] - dlead.first[i];
    }
    const Rational qc = rlead.second / dlead.second;
    Poly t(nvars_);
    t.add_term(qm, qc);
    quot = quot + t;
    rem = rem - t * d;
    if (!rem.is_zero() && !(rem.terms_.rbegin()->first < rlead.first))
      throw std::domain_error("inexact polynomial division");
  }
  return quot;
}

Rational Poly::eval(const Vec& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("eval point arity");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    if (first && sgn(c) < 0) os << "-";
    first = false;
    const Rational ac = abs(c);
    bool printed_coeff = false;
    bool has_vars = false;
    for (uint32_t e : it->first) has_vars |= (e > 0);
    if (ac != 1 || !has_vars) {
      os << rational_to_string(ac);
      printed_coeff = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      const uint32_t e = it->first[i];
      if (e == 0) continue;
      if (printed_coeff || has_vars) {
        if (printed_coeff) os << "*";
      }
      os << "l" << (i + 1);
      if (e > 1) os << "^" << e;
      printed_coeff = true;
    }
  }
  return os.str();
}

}  // namespace lieindex
