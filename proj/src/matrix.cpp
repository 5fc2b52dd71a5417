#include "lieindex/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "lieindex/elimination.hpp"

namespace lieindex {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::column(const Vec& v) {
  Mat m(static_cast<int>(v.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
  return m;
}

Vec Mat::row(int r) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
  Mat p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) p.at(i, j) += aik * o.at(k, j);
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape");
  Mat s(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape");
  Mat s(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

Mat Mat::scaled(const Rational& s) const {
  Mat m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix apply shape");
  Vec r = zero_vec(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn(at(i, j)) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Rational Mat::trace() const {
  Rational t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape");
  Mat m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape");
  Mat m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

int rank(const Mat& m) {
  // Clear denominators per row so Bareiss runs over integers.
  std::vector<std::vector<Rational>> g(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j) * Rational(l);
  }
  return bareiss_rank(
      g, [](const Rational& x) { return sgn(x) == 0; },
      [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

Mat rref(Mat m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!is_zero(m.at(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    const Rational inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      const Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

Mat kernel_basis(const Mat& m) {
  std::vector<int> pivots;
  const Mat r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  const int k = m.cols() - static_cast<int>(pivots.size());
  Mat basis(m.cols(), k);
  int out = 0;
  for (int freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    basis.at(freec, out) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], out) = -r.at(static_cast<int>(pi), freec);
    ++out;
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve shape");
  Mat aug = hstack(a, Mat::column(b));
  std::vector<int> pivots;
  const Mat r = rref(std::move(aug), &pivots);
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x = zero_vec(a.cols());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = r.at(static_cast<int>(pi), a.cols());
  return x;
}

Mat canonical_span(const Mat& gens) {
  std::vector<int> pivots;
  const Mat r = rref(gens.transpose(), &pivots);
  Mat basis(gens.rows(), static_cast<int>(pivots.size()));
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < gens.rows(); ++j)
      basis.at(j, static_cast<int>(i)) = r.at(static_cast<int>(i), j);
  return basis;
}

bool in_span(const Mat& basis, const Vec& v) {
  return solve(basis, v).has_value();
}

Mat subspace_sum(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("subspace sum: ambient dimension mismatch");
  return canonical_span(hstack(a, b));
}

Mat subspace_intersect(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("subspace intersect: ambient dimension mismatch");
  // x in both spans: a u = b w, i.e. (u; w) in ker [a | -b].
  const Mat ker = kernel_basis(hstack(a, b.scaled(Rational(-1))));
  Mat gens(a.rows(), ker.cols());
  for (int c = 0; c < ker.cols(); ++c) {
    Vec u(a.cols());
    for (int i = 0; i < a.cols(); ++i) u[i] = ker.at(i, c);
    const Vec x = a.apply(u);
    for (int i = 0; i < a.rows(); ++i) gens.at(i, c) = x[i];
  }
  return canonical_span(gens);
}

}  // namespace lieindex
