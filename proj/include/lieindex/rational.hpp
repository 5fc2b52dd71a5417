#ifndef LIEINDEX_RATIONAL_HPP
#define LIEINDEX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieindex {

/// Exact rational scalar. mpq_class keeps the canonical form we rely on
/// (denominator > 0, gcd(|num|, den) = 1) after every operation.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" rendering, denominator always explicit ("3" -> "3/1").
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" and bare integers "p".
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rational(0)); }

}  // namespace lieindex

#endif
