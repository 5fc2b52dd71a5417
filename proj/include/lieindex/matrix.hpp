#ifndef LIEINDEX_MATRIX_HPP
#define LIEINDEX_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieindex/rational.hpp"

namespace lieindex {

/// Dense matrix over the exact rationals, row major. Dimensions here stay
/// small (ambient algebras of dimension <= ~40), so no sparsity machinery.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat column(const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec col(int c) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rational& s) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  Rational trace() const;
  std::string to_string() const;  // debugging aid

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Exact rank via fraction-free Bareiss elimination.
int rank(const Mat& m);

/// Reduced row echelon form (pivots 1, pivot columns cleared). Returns the
/// pivot column indices in order. This is the canonical form behind
/// subspace equality.
Mat rref(Mat m, std::vector<int>* pivot_cols = nullptr);

/// Columns form a basis of the right null space {x : m x = 0}.
/// Column count = cols - rank(m), and m * result = 0 exactly.
Mat kernel_basis(const Mat& m);

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Canonical echelonized basis of the column span of `gens`: columns are
/// the nonzero rows of rref(gens^T). Two generating sets with equal span
/// produce identical matrices.
Mat canonical_span(const Mat& gens);

bool in_span(const Mat& basis, const Vec& v);

/// Echelonized basis of span(a) + span(b). Inputs are dim x k bases with a
/// common ambient dimension.
Mat subspace_sum(const Mat& a, const Mat& b);

/// Echelonized basis of span(a) ∩ span(b).
Mat subspace_intersect(const Mat& a, const Mat& b);

}  // namespace lieindex

#endif
