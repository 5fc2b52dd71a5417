#ifndef LIEINDEX_LIEALG_HPP
#define LIEINDEX_LIEALG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieindex/matrix.hpp"

namespace lieindex {

enum class errc {
  invalid_argument,
  dimension_mismatch,
  jacobi_violation,
  not_subalgebra,
  not_ideal,
  not_nilpotent,
  parse_error,
  io_error,
};

class lie_error : public std::runtime_error {
 public:
  lie_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

struct JacobiViolation {
  int i, j, k;
  Vec residual;
  std::string describe(const std::vector<std::string>& labels) const;
};

/// Finite-dimensional Lie algebra over the rationals, given by sparse
/// structure constants on a chosen basis. Brackets are stored for i < j
/// only, so antisymmetry holds by construction; the Jacobi identity is
/// checked on every basis triple before an instance can exist.
class LieAlgebra {
 public:
  using Term = std::pair<int, Rational>;
  using SparseVec = std::vector<Term>;
  using BracketMap = std::map<std::pair<int, int>, SparseVec>;

  LieAlgebra() : dim_(0) {}

  /// Validating factory; throws lie_error(jacobi_violation) naming the
  /// first failing triple.
  static LieAlgebra make(int dim, std::vector<std::string> labels,
                         BracketMap brackets);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const BracketMap& brackets() const { return brackets_; }

  /// [e_i, e_j] as a dense coordinate vector (any i, j).
  Vec bracket_basis(int i, int j) const;

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(x): column j is [x, e_j].
  Mat ad(const Vec& x) const;

  bool operator==(const LieAlgebra& o) const {
    return dim_ == o.dim_ && labels_ == o.labels_ && brackets_ == o.brackets_;
  }

 private:
  LieAlgebra(int dim, std::vector<std::string> labels, BracketMap brackets)
      : dim_(dim), labels_(std::move(labels)), brackets_(std::move(brackets)) {}

  int dim_;
  std::vector<std::string> labels_;
  BracketMap brackets_;
};

/// Re-checks the Jacobi identity; nullopt means ok. Algebras produced by
/// make() always pass, but raw bracket data (e.g. from a file) can be
/// inspected without constructing.
std::optional<JacobiViolation> validate(int dim,
                                        const LieAlgebra::BracketMap& brackets);
std::optional<JacobiViolation> validate(const LieAlgebra& g);

/// Subspace of a fixed ambient coordinate space, held as a canonical
/// echelonized basis so equality of subspaces is equality of
/// representations.
class Subspace {
 public:
  Subspace() : ambient_dim_(0) {}
  Subspace(int ambient_dim, const Mat& generators);

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  static Subspace span_of(int ambient_dim, const std::vector<Vec>& gens);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.col(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  bool operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_dim_;
  Mat basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Element of the dual space, as exact coefficients against the ambient
/// basis.
struct LinearForm {
  Vec coeffs;

  LinearForm() = default;
  explicit LinearForm(Vec c) : coeffs(std::move(c)) {}

  int ambient_dim() const { return static_cast<int>(coeffs.size()); }
  Rational operator()(const Vec& v) const;
  bool is_zero() const;

  /// Coefficients of the restriction to s, against s's basis.
  LinearForm restricted_to(const Subspace& s) const;
};

// --- Subalgebra calculus -------------------------------------------------

/// {x in g : [x, s] = 0}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

/// {x in g : [x, s] ⊆ s}.
Subspace normalizer(const LieAlgebra& g, const Subspace& s);

/// Center of the subalgebra s, i.e. {x in s : [x, s] = 0}. Requires s
/// closed under the bracket.
Subspace center_of(const LieAlgebra& g, const Subspace& s);

/// Center of g itself.
Subspace center(const LieAlgebra& g);

/// Span of [a, b].
Subspace bracket_span(const LieAlgebra& g, const Subspace& a,
                      const Subspace& b);

/// Derived subalgebra [g, g].
Subspace derived(const LieAlgebra& g);

/// Smallest ideal containing the given vectors.
Subspace ideal_generated_by(const LieAlgebra& g, const std::vector<Vec>& gens);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_abelian(const LieAlgebra& g, const Subspace& s);
bool is_abelian(const LieAlgebra& g);

/// Lie algebra structure induced on a bracket-closed subspace, expressed in
/// the basis of s. Reports the first witness pair if s is not closed.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s);

/// Quotient by an ideal, carrying the complement bookkeeping needed to map
/// ambient vectors to quotient coordinates.
struct Quotient {
  LieAlgebra algebra;
  Mat complement;   // ambient_dim x m, columns represent the classes
  Mat projection;   // m x ambient_dim, v -> quotient coordinates
};

/// Complement policy: the lexicographically first standard basis vectors
/// completing a's echelon basis.
Quotient quotient(const LieAlgebra& g, const Subspace& a);

/// Same, with caller-chosen complement columns (must complete a to g).
Quotient quotient_with_complement(const LieAlgebra& g, const Subspace& a,
                                  const Mat& complement);

/// Structure constants after the invertible change of basis f_j = T e_j
/// (columns of T are the new basis vectors in old coordinates).
LieAlgebra change_basis(const LieAlgebra& g, const Mat& t);

}  // namespace lieindex

#endif
