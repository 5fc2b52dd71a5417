#ifndef LIEINDEX_POLYNOMIAL_HPP
#define LIEINDEX_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieindex/rational.hpp"

namespace lieindex {

/// Sparse multivariate polynomial over the rationals, used by the symbolic
/// generic-rank mode and the determinant identities. Monomials are exponent
/// vectors ordered lexicographically; the map never stores zero
/// coefficients x so is_zero is a size check.
class Poly {
 public:
  using Monomial = std::vector<uint32_t>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& s) const;

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Exact quotient this / d; throws std::domain_error if d does not divide.
  Poly exact_div(const Poly& d) const;

  Rational eval(const Vec& point) const;

  /// Rendering like "3/1*l1^2*l3 - 2/1" with variables named l1..ln.
  std::string to_string() const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rational& c);

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace lieindex

#endif
