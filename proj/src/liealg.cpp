#include "lieindex/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace lieindex {

namespace {

LieAlgebra::SparseVec to_sparse(const Vec& v) {
  LieAlgebra::SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

void normalize_brackets(int dim, LieAlgebra::BracketMap& brackets) {
  for (auto it = brackets.begin(); it != brackets.end();) {
    auto [i, j] = it->first;
    if (i < 0 || j < 0 || i >= dim || j >= dim || i >= j)
      throw lie_error(errc::invalid_argument,
                      "bracket entries must have 0 <= i < j < dim");
    // Re-sort and merge duplicate targets, drop zeros.
    std::map<int, Rational> acc;
    for (const auto& [k, c] : it->second) {
      if (k < 0 || k >= dim)
        throw lie_error(errc::invalid_argument, "bracket target out of range");
      acc[k] += c;
    }
    LieAlgebra::SparseVec clean;
    for (const auto& [k, c] : acc)
      if (!is_zero(c)) clean.emplace_back(k, c);
    if (clean.empty()) {
      it = brackets.erase(it);
    } else {
      it->second = std::move(clean);
      ++it;
    }
  }
}

}  // namespace

std::string JacobiViolation::describe(
    const std::vector<std::string>& labels) const {
  std::ostringstream os;
  os << "Jacobi identity fails on triple (" << labels[i] << ", " << labels[j]
     << ", " << labels[k] << ")";
  return os.str();
}

LieAlgebra LieAlgebra::make(int dim, std::vector<std::string> labels,
                            BracketMap brackets) {
  if (dim < 0) throw lie_error(errc::invalid_argument, "negative dimension");
  if (labels.empty()) {
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != dim)
    throw lie_error(errc::invalid_argument, "label count != dim");
  normalize_brackets(dim, brackets);
  if (auto viol = validate(dim, brackets))
    throw lie_error(errc::jacobi_violation, viol->describe(labels));
  return LieAlgebra(dim, std::move(labels), std::move(brackets));
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec r = zero_vec(dim_);
  if (i == j) return r;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return r;
  for (const auto& [k, c] : it->second) r[k] = flip ? Rational(-c) : c;
  return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw lie_error(errc::dimension_mismatch, "bracket arity");
  Vec r = zero_vec(dim_);
  for (const auto& [ij, terms] : brackets_) {
    const auto [i, j] = ij;
    const Rational coef = x[i] * y[j] - x[j] * y[i];
    if (is_zero(coef)) continue;
    for (const auto& [k, c] : terms) r[k] += coef * c;
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw lie_error(errc::dimension_mismatch, "ad arity");
  Mat m(dim_, dim_);
  for (const auto& [ij, terms] : brackets_) {
    const auto [i, j] = ij;
    // [x, e_j] picks up x_i c_ij ; [x, e_i] picks up -x_j c_ij.
    if (!is_zero(x[i]))
      for (const auto& [k, c] : terms) m.at(k, j) += x[i] * c;
    if (!is_zero(x[j]))
      for (const auto& [k, c] : terms) m.at(k, i) -= x[j] * c;
  }
  return m;
}

std::optional<JacobiViolation> validate(
    int dim, const LieAlgebra::BracketMap& brackets) {
  // Temporary algebra-like accessors over the raw map.
  auto basis_bracket = [&](int i, int j) -> Vec {
    Vec r = zero_vec(dim);
    if (i == j) return r;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets.find({i, j});
    if (it == brackets.end()) return r;
    for (const auto& [k, c] : it->second) r[k] = flip ? Rational(-c) : c;
    return r;
  };
  auto bracket_vec = [&](const Vec& x, int j) -> Vec {
    Vec r = zero_vec(dim);
    for (int i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      const Vec bij = basis_bracket(i, j);
      for (int k = 0; k < dim; ++k)
        if (!is_zero(bij[k])) r[k] += x[i] * bij[k];
    }
    return r;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Vec bij = basis_bracket(i, j);
      for (int k = j + 1; k < dim; ++k) {
        Vec acc = bracket_vec(bij, k);
        const Vec bjk = basis_bracket(j, k);
        Vec t = bracket_vec(bjk, i);
        for (int u = 0; u < dim; ++u) acc[u] += t[u];
        const Vec bki = basis_bracket(k, i);
        t = bracket_vec(bki, j);
        for (int u = 0; u < dim; ++u) acc[u] += t[u];
        const bool bad =
            std::any_of(acc.begin(), acc.end(),
                        [](const Rational& q) { return sgn(q) != 0; });
        if (bad) return JacobiViolation{i, j, k, acc};
      }
    }
  return std::nullopt;
}

std::optional<JacobiViolation> validate(const LieAlgebra& g) {
  return validate(g.dim(), g.brackets());
}

// --- Subspace -------------------------------------------------------------

Subspace::Subspace(int ambient_dim, const Mat& generators)
    : ambient_dim_(ambient_dim) {
  if (generators.rows() != ambient_dim)
    throw lie_error(errc::dimension_mismatch, "subspace generator shape");
  basis_ = canonical_span(generators);
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(ambient_dim, Mat(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Mat::identity(ambient_dim));
}

Subspace Subspace::span_of(int ambient_dim, const std::vector<Vec>& gens) {
  Mat m(ambient_dim, static_cast<int>(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c) {
    if (static_cast<int>(gens[c].size()) != ambient_dim)
      throw lie_error(errc::dimension_mismatch, "span generator shape");
    for (int r = 0; r < ambient_dim; ++r)
      m.at(r, static_cast<int>(c)) = gens[c][r];
  }
  return Subspace(ambient_dim, m);
}

bool Subspace::contains(const Vec& v) const { return in_span(basis_, v); }

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_dim_ != ambient_dim_) return false;
  for (int c = 0; c < s.dim(); ++c)
    if (!contains(s.basis_vector(c))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw lie_error(errc::dimension_mismatch, "subspace sum ambient");
  return Subspace(a.ambient_dim(), hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw lie_error(errc::dimension_mismatch, "subspace intersect ambient");
  return Subspace(a.ambient_dim(), subspace_intersect(a.basis(), b.basis()));
}

Rational LinearForm::operator()(const Vec& v) const {
  if (v.size() != coeffs.size())
    throw lie_error(errc::dimension_mismatch, "form/vector arity");
  Rational s = 0;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) s += coeffs[i] * v[i];
  return s;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

LinearForm LinearForm::restricted_to(const Subspace& s) const {
  if (s.ambient_dim() != ambient_dim())
    throw lie_error(errc::dimension_mismatch, "form restriction ambient");
  Vec r(s.dim());
  for (int i = 0; i < s.dim(); ++i) r[i] = (*this)(s.basis_vector(i));
  return LinearForm(std::move(r));
}

// --- Subalgebra calculus ---------------------------------------------------

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim())
    throw lie_error(errc::dimension_mismatch, "centralizer ambient");
  if (s.dim() == 0) return Subspace::full(g.dim());
  Mat stacked(0, g.dim());
  for (int c = 0; c < s.dim(); ++c)
    stacked = vstack(stacked, g.ad(s.basis_vector(c)));
  return Subspace(g.dim(), kernel_basis(stacked));
}

Subspace normalizer(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim())
    throw lie_error(errc::dimension_mismatch, "normalizer ambient");
  if (s.dim() == 0 || s.dim() == g.dim()) return Subspace::full(g.dim());
  // Rows of ann span the annihilator of s; [x, b] in s iff ann * [x, b] = 0.
  const Mat ann = kernel_basis(s.basis().transpose()).transpose();
  Mat stacked(0, g.dim());
  for (int c = 0; c < s.dim(); ++c)
    stacked = vstack(stacked, ann * g.ad(s.basis_vector(c)).scaled(Rational(-1)));
  return Subspace(g.dim(), kernel_basis(stacked));
}

Subspace center_of(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s))
    throw lie_error(errc::not_subalgebra, "center_of: not a subalgebra");
  return intersect(s, centralizer(g, s));
}

Subspace center(const LieAlgebra& g) {
  return centralizer(g, Subspace::full(g.dim()));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a,
                      const Subspace& b) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      gens.push_back(g.bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::span_of(g.dim(), gens);
}

Subspace derived(const LieAlgebra& g) {
  const Subspace full = Subspace::full(g.dim());
  return bracket_span(g, full, full);
}

Subspace ideal_generated_by(const LieAlgebra& g, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span_of(g.dim(), gens);
  for (;;) {
    const Subspace next = sum(s, bracket_span(g, Subspace::full(g.dim()), s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(s.basis_vector(i), s.basis_vector(j))))
        return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = zero_vec(g.dim());
    ei[i] = 1;
    for (int j = 0; j < s.dim(); ++j)
      if (!s.contains(g.bracket(ei, s.basis_vector(j)))) return false;
  }
  return true;
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      const Vec b = g.bracket(s.basis_vector(i), s.basis_vector(j));
      if (std::any_of(b.begin(), b.end(),
                      [](const Rational& q) { return sgn(q) != 0; }))
        return false;
    }
  return true;
}

bool is_abelian(const LieAlgebra& g) {
  return is_abelian(g, Subspace::full(g.dim()));
}

namespace {

std::string column_label(const LieAlgebra& g, const Vec& col,
                         const std::string& fallback) {
  int nz = -1;
  for (int i = 0; i < static_cast<int>(col.size()); ++i) {
    if (is_zero(col[i])) continue;
    if (nz >= 0) return fallback;
    nz = i;
  }
  if (nz >= 0 && col[nz] == 1) return g.label(nz);
  return fallback;
}

}  // namespace

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      const Vec w = g.bracket(s.basis_vector(i), s.basis_vector(j));
      const auto coords = solve(s.basis(), w);
      if (!coords)
        throw lie_error(errc::not_subalgebra,
                        "subspace not closed under bracket at basis pair (" +
                            std::to_string(i) + ", " + std::to_string(j) + ")");
      LieAlgebra::SparseVec sv = to_sparse(*coords);
      if (!sv.empty()) brackets[{i, j}] = std::move(sv);
    }
  std::vector<std::string> labels;
  for (int c = 0; c < s.dim(); ++c)
    labels.push_back(
        column_label(g, s.basis_vector(c), "b" + std::to_string(c)));
  return LieAlgebra::make(s.dim(), std::move(labels), std::move(brackets));
}

namespace {

Quotient quotient_impl(const LieAlgebra& g, const Subspace& a,
                       const Mat& complement,
                       const std::vector<std::string>& labels) {
  const int m = complement.cols();
  const Mat full = hstack(a.basis(), complement);
  if (full.cols() != g.dim() || rank(full) != g.dim())
    throw lie_error(errc::invalid_argument,
                    "complement does not complete the ideal to the ambient");
  // Invert [A | C]; the bottom m rows of the inverse project onto quotient
  // coordinates along a.
  std::vector<int> pivots;
  const Mat inv_aug = rref(hstack(full, Mat::identity(g.dim())), &pivots);
  Mat proj(m, g.dim());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < g.dim(); ++j)
      proj.at(i, j) = inv_aug.at(a.dim() + i, g.dim() + j);

  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Vec w =
          proj.apply(g.bracket(complement.col(i), complement.col(j)));
      LieAlgebra::SparseVec sv = to_sparse(w);
      if (!sv.empty()) brackets[{i, j}] = std::move(sv);
    }
  Quotient q{LieAlgebra::make(m, labels, std::move(brackets)), complement,
             proj};
  return q;
}

}  // namespace

Quotient quotient(const LieAlgebra& g, const Subspace& a) {
  if (!is_ideal(g, a)) {
    // Name a witness pair for the error report.
    for (int i = 0; i < g.dim(); ++i) {
      Vec ei = zero_vec(g.dim());
      ei[i] = 1;
      for (int j = 0; j < a.dim(); ++j)
        if (!a.contains(g.bracket(ei, a.basis_vector(j))))
          throw lie_error(errc::not_ideal,
                          "not an ideal: [" + g.label(i) + ", basis " +
                              std::to_string(j) + "] escapes the subspace");
    }
  }
  // Lexicographically first standard basis vectors completing a.
  Mat comp(g.dim(), 0);
  std::vector<std::string> labels;
  Mat acc = a.basis();
  for (int i = 0; i < g.dim() && comp.cols() < g.dim() - a.dim(); ++i) {
    Vec ei = zero_vec(g.dim());
    ei[i] = 1;
    if (in_span(acc, ei)) continue;
    acc = hstack(acc, Mat::column(ei));
    comp = hstack(comp, Mat::column(ei));
    labels.push_back(g.label(i) + "~");
  }
  return quotient_impl(g, a, comp, labels);
}

Quotient quotient_with_complement(const LieAlgebra& g, const Subspace& a,
                                  const Mat& complement) {
  if (!is_ideal(g, a))
    throw lie_error(errc::not_ideal, "quotient by a non-ideal");
  std::vector<std::string> labels;
  for (int c = 0; c < complement.cols(); ++c)
    labels.push_back(
        column_label(g, complement.col(c), "c" + std::to_string(c)) + "~");
  return quotient_impl(g, a, complement, labels);
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& t) {
  if (t.rows() != g.dim() || t.cols() != g.dim() || rank(t) != g.dim())
    throw lie_error(errc::invalid_argument, "change of basis not invertible");
  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      const Vec w = g.bracket(t.col(i), t.col(j));
      const Vec coords = *solve(t, w);
      LieAlgebra::SparseVec sv = to_sparse(coords);
      if (!sv.empty()) brackets[{i, j}] = std::move(sv);
    }
  return LieAlgebra::make(g.dim(), g.labels(), std::move(brackets));
}

}  // namespace lieindex
