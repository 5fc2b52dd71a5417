#include "lieindex/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace lieindex {

namespace {

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

Mat unit_matrix(int n, int r, int c) {
  Mat m(n, n);
  m.at(r, c) = 1;
  return m;
}

LieAlgebra::SparseVec to_sparse(const Vec& v) {
  LieAlgebra::SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

Representation Representation::make(LieAlgebra algebra,
                                    std::vector<Mat> actions,
                                    int module_dim) {
  if (static_cast<int>(actions.size()) != algebra.dim())
    throw lie_error(errc::invalid_argument,
                    "one action matrix per basis vector required");
  int m = actions.empty() ? std::max(module_dim, 0) : actions[0].rows();
  if (module_dim >= 0 && m != module_dim)
    throw lie_error(errc::invalid_argument,
                    "module_dim disagrees with the action matrices");
  for (const Mat& a : actions)
    if (a.rows() != m || a.cols() != m)
      throw lie_error(errc::invalid_argument, "action matrices must be square "
                                              "and of equal size");
  for (int i = 0; i < algebra.dim(); ++i)
    for (int j = i + 1; j < algebra.dim(); ++j) {
      const Vec bij = algebra.bracket_basis(i, j);
      Mat expected(m, m);
      for (int k = 0; k < algebra.dim(); ++k)
        if (!is_zero(bij[k])) expected = expected + actions[k].scaled(bij[k]);
      const Mat commutator = actions[i] * actions[j] - actions[j] * actions[i];
      if (!(commutator - expected).is_zero())
        throw lie_error(errc::invalid_argument,
                        "not a representation: fails on basis pair (" +
                            algebra.label(i) + ", " + algebra.label(j) + ")");
    }
  return Representation{std::move(algebra), m, std::move(actions)};
}

Mat Representation::act(const Vec& x) const {
  if (static_cast<int>(x.size()) != algebra.dim())
    throw lie_error(errc::dimension_mismatch, "act arity");
  Mat m(module_dim, module_dim);
  for (int i = 0; i < algebra.dim(); ++i)
    if (!is_zero(x[i])) m = m + actions[i].scaled(x[i]);
  return m;
}

Mat MatrixAlgebra::matrix_of(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw lie_error(errc::dimension_mismatch, "matrix_of arity");
  Mat m(n, n);
  for (int i = 0; i < dim(); ++i)
    if (!is_zero(coords[i])) m = m + basis_mats[i].scaled(coords[i]);
  return m;
}

std::optional<Vec> MatrixAlgebra::try_coords_of(const Mat& m) const {
  if (m.rows() != n || m.cols() != n)
    throw lie_error(errc::dimension_mismatch, "coords_of matrix size");
  return solve(flat_basis, flatten(m));
}

Vec MatrixAlgebra::coords_of(const Mat& m) const {
  auto c = try_coords_of(m);
  if (!c)
    throw lie_error(errc::invalid_argument,
                    "matrix lies outside the realized algebra");
  return *c;
}

MatrixAlgebra matrix_algebra(std::vector<Mat> basis,
                             std::vector<std::string> labels) {
  const int dim = static_cast<int>(basis.size());
  const int n = dim == 0 ? 0 : basis[0].rows();
  Mat flat(n * n, dim);
  for (int c = 0; c < dim; ++c) {
    if (basis[c].rows() != n || basis[c].cols() != n)
      throw lie_error(errc::invalid_argument, "basis matrices must share size");
    const Vec f = flatten(basis[c]);
    for (int r = 0; r < n * n; ++r) flat.at(r, c) = f[r];
  }
  if (rank(flat) != dim)
    throw lie_error(errc::invalid_argument, "basis matrices not independent");

  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Mat comm = basis[i] * basis[j] - basis[j] * basis[i];
      const auto coords = solve(flat, flatten(comm));
      if (!coords)
        throw lie_error(errc::not_subalgebra,
                        "matrices not closed under commutator at pair (" +
                            labels[i] + ", " + labels[j] + ")");
      auto sv = to_sparse(*coords);
      if (!sv.empty()) brackets[{i, j}] = std::move(sv);
    }
  MatrixAlgebra out;
  out.algebra = LieAlgebra::make(dim, std::move(labels), std::move(brackets));
  out.n = n;
  out.basis_mats = std::move(basis);
  out.flat_basis = std::move(flat);
  return out;
}

namespace {

std::string pos_label(const char* stem, int i, int j) {
  std::ostringstream os;
  os << stem << i + 1 << j + 1;
  return os.str();
}

MatrixAlgebra build_gl(int n) {
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back(pos_label("E", i, j));
    }
  return matrix_algebra(std::move(basis), std::move(labels));
}

MatrixAlgebra build_sl(int n) {
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back(pos_label("E", i, j));
    }
  for (int i = 0; i + 1 < n; ++i) {
    basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i + 1));
  }
  return matrix_algebra(std::move(basis), std::move(labels));
}

MatrixAlgebra build_so(int n) {
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j) - unit_matrix(n, j, i));
      labels.push_back(pos_label("A", i, j));
    }
  return matrix_algebra(std::move(basis), std::move(labels));
}

MatrixAlgebra build_sp(int two_n) {
  const int n = two_n / 2;
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  // [[A, B], [C, -A^T]] with B, C symmetric.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      basis.push_back(unit_matrix(two_n, i, j) -
                      unit_matrix(two_n, n + j, n + i));
      labels.push_back(pos_label("A", i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat b = unit_matrix(two_n, i, n + j);
      if (i != j) b = b + unit_matrix(two_n, j, n + i);
      basis.push_back(b);
      labels.push_back(pos_label("B", i, j));
      Mat c = unit_matrix(two_n, n + i, j);
      if (i != j) c = c + unit_matrix(two_n, n + j, i);
      basis.push_back(c);
      labels.push_back(pos_label("C", i, j));
    }
  return matrix_algebra(std::move(basis), std::move(labels));
}

}  // namespace

MatrixAlgebra classical(const std::string& name, int param) {
  if (param < 1)
    throw lie_error(errc::invalid_argument, "classical: size must be >= 1");
  if (name == "gl") return build_gl(param);
  if (name == "sl") return build_sl(param);
  if (name == "so") return build_so(param);
  if (name == "sp") {
    if (param % 2 != 0)
      throw lie_error(errc::invalid_argument, "sp requires an even parameter");
    return build_sp(param);
  }
  throw lie_error(errc::invalid_argument, "unknown classical family: " + name);
}

MatrixAlgebra borel_gl(int n) {
  if (n < 1) throw lie_error(errc::invalid_argument, "borel_gl: n >= 1");
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back(pos_label("E", i, j));
    }
  return matrix_algebra(std::move(basis), std::move(labels));
}

MatrixAlgebra strict_upper(int n) {
  if (n < 2) throw lie_error(errc::invalid_argument, "strict_upper: n >= 2");
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back(pos_label("E", i, j));
    }
  return matrix_algebra(std::move(basis), std::move(labels));
}

TriangularDecomposition triangular_sl(int n) {
  TriangularDecomposition t{classical("sl", n), {}, {}, {}, {}};
  t.n_minus = triangular_part(t.sl, TriangularPart::strict_lower);
  t.cartan = triangular_part(t.sl, TriangularPart::diagonal);
  t.n_plus = triangular_part(t.sl, TriangularPart::strict_upper);
  t.borel = triangular_part(t.sl, TriangularPart::upper);
  return t;
}

LieAlgebra heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0)
    throw lie_error(errc::invalid_argument,
                    "heisenberg dimension must be odd and >= 3");
  const int m = (dim - 1) / 2;
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i)
    labels.push_back(m == 1 ? "P" : "P" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i)
    labels.push_back(m == 1 ? "Q" : "Q" + std::to_string(i + 1));
  labels.push_back("E");
  LieAlgebra::BracketMap brackets;
  for (int i = 0; i < m; ++i) brackets[{i, m + i}] = {{2 * m, Rational(1)}};
  return LieAlgebra::make(dim, std::move(labels), std::move(brackets));
}

MautnerAlgebra mautner() {
  // Basis (P, Q, E, X): [P,Q] = E, [X,P] = Q, [X,Q] = -P.
  LieAlgebra::BracketMap brackets;
  brackets[{0, 1}] = {{2, Rational(1)}};
  brackets[{0, 3}] = {{1, Rational(-1)}};  // [P,X] = -Q
  brackets[{1, 3}] = {{0, Rational(1)}};   // [Q,X] = P
  LieAlgebra g = LieAlgebra::make(4, {"P", "Q", "E", "X"}, std::move(brackets));
  Vec p = zero_vec(4), q = zero_vec(4), e = zero_vec(4), x = zero_vec(4);
  p[0] = 1;
  q[1] = 1;
  e[2] = 1;
  x[3] = 1;
  return MautnerAlgebra{g, Subspace::span_of(4, {p, q, e}),
                        Subspace::span_of(4, {x})};
}

Mat jordan_matrix(int n) {
  Mat j(n, n);
  for (int i = 0; i + 1 < n; ++i) j.at(i + 1, i) = 1;
  return j;
}

Mat jordan_power(int n, int p) {
  Mat m(n, n);
  for (int i = 0; i + p < n; ++i) m.at(i + p, i) = 1;
  return m;
}

Vec jordan_nilpotent(int n, int p) {
  if (p < 1 || p > n)
    throw lie_error(errc::invalid_argument, "jordan_nilpotent: 1 <= p <= n");
  // gl(n) basis is E_ij in row-major order.
  Vec coords = zero_vec(n * n);
  for (int i = 0; i + p < n; ++i) coords[(i + p) * n + i] = 1;
  return coords;
}

SemidirectProduct semidirect_abelian(const Representation& rho) {
  const int m = rho.module_dim;
  const int q = rho.algebra.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i < q; ++i) labels.push_back(rho.algebra.label(i));

  LieAlgebra::BracketMap brackets;
  // [v_a, x_i] = -rho(x_i) v_a.
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < q; ++i) {
      LieAlgebra::SparseVec sv;
      for (int b = 0; b < m; ++b) {
        const Rational& c = rho.actions[i].at(b, a);
        if (!is_zero(c)) sv.emplace_back(b, -c);
      }
      if (!sv.empty()) brackets[{a, m + i}] = std::move(sv);
    }
  for (const auto& [ij, terms] : rho.algebra.brackets()) {
    LieAlgebra::SparseVec sv;
    for (const auto& [k, c] : terms) sv.emplace_back(m + k, c);
    brackets[{m + ij.first, m + ij.second}] = std::move(sv);
  }
  LieAlgebra g = LieAlgebra::make(m + q, std::move(labels), std::move(brackets));

  std::vector<Vec> vgens, qgens;
  for (int a = 0; a < m; ++a) {
    Vec v = zero_vec(m + q);
    v[a] = 1;
    vgens.push_back(v);
  }
  for (int i = 0; i < q; ++i) {
    Vec v = zero_vec(m + q);
    v[m + i] = 1;
    qgens.push_back(v);
  }
  return SemidirectProduct{g, Subspace::span_of(m + q, vgens),
                           Subspace::span_of(m + q, qgens)};
}

LieAlgebra generalized_takiff(const LieAlgebra& q, int k) {
  if (k < 1) throw lie_error(errc::invalid_argument, "takiff: k >= 1");
  const int d = q.dim();
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a)
    for (int i = 0; i < d; ++i)
      labels.push_back(a == 0 ? q.label(i)
                              : q.label(i) + ".t" + std::to_string(a));
  LieAlgebra::BracketMap brackets;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      if (a + b > k - 1) continue;
      for (const auto& [ij, terms] : q.brackets()) {
        const int u = a * d + ij.first;
        const int v = b * d + ij.second;
        LieAlgebra::SparseVec sv;
        for (const auto& [t, c] : terms) sv.emplace_back((a + b) * d + t, c);
        brackets[{u, v}] = sv;
        if (a != b) {
          // [x_j ⊗ t^a, x_i ⊗ t^b] = -[x_i, x_j] ⊗ t^{a+b}, stored at the
          // index pair (a*d + j, b*d + i) which is ordered since a < b.
          const int u2 = a * d + ij.second;
          const int v2 = b * d + ij.first;
          LieAlgebra::SparseVec sv2;
          for (const auto& [t, c] : terms)
            sv2.emplace_back((a + b) * d + t, -c);
          brackets[{u2, v2}] = std::move(sv2);
        }
      }
    }
  return LieAlgebra::make(k * d, std::move(labels), std::move(brackets));
}

namespace {

struct VectorComplement {
  Mat complement;  // ambient x m
  Mat projection;  // m x ambient
  std::vector<std::string> labels;
};

/// Lexicographically first standard basis vectors completing s, plus the
/// projection onto their coordinates along s.
VectorComplement vector_complement(const LieAlgebra& g, const Subspace& s) {
  VectorComplement vc{Mat(g.dim(), 0), Mat(0, 0), {}};
  Mat acc = s.basis();
  for (int i = 0; i < g.dim() && vc.complement.cols() < g.dim() - s.dim();
       ++i) {
    Vec ei = zero_vec(g.dim());
    ei[i] = 1;
    if (in_span(acc, ei)) continue;
    acc = hstack(acc, Mat::column(ei));
    vc.complement = hstack(vc.complement, Mat::column(ei));
    vc.labels.push_back(g.label(i) + "~");
  }
  const int m = vc.complement.cols();
  const Mat full = hstack(s.basis(), vc.complement);
  std::vector<int> pivots;
  const Mat inv_aug = rref(hstack(full, Mat::identity(g.dim())), &pivots);
  vc.projection = Mat(m, g.dim());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < g.dim(); ++j)
      vc.projection.at(i, j) = inv_aug.at(s.dim() + i, g.dim() + j);
  return vc;
}

}  // namespace

SemidirectProduct inonu_wigner(const LieAlgebra& g, const Subspace& k) {
  if (k.ambient_dim() != g.dim())
    throw lie_error(errc::dimension_mismatch, "contraction ambient");
  if (!is_subalgebra(g, k))
    throw lie_error(errc::not_subalgebra,
                    "contraction requires a subalgebra");
  const LieAlgebra ksub = subalgebra(g, k);
  if (k.dim() == g.dim())
    return SemidirectProduct{ksub, Subspace::zero(g.dim()),
                             Subspace::full(g.dim())};
  const VectorComplement vc = vector_complement(g, k);
  std::vector<Mat> actions;
  for (int i = 0; i < k.dim(); ++i)
    actions.push_back(vc.projection * g.ad(k.basis_vector(i)) * vc.complement);
  const Representation rho =
      Representation::make(ksub, std::move(actions), g.dim() - k.dim());
  SemidirectProduct sp = semidirect_abelian(rho);
  // Rename module coordinates after the ambient complement they represent.
  std::vector<std::string> labels = vc.labels;
  for (int i = 0; i < k.dim(); ++i) labels.push_back(ksub.label(i));
  sp.algebra =
      LieAlgebra::make(sp.algebra.dim(), std::move(labels),
                       LieAlgebra::BracketMap(sp.algebra.brackets()));
  return sp;
}

Representation irreducible_sl2(int m) {
  if (m < 1) throw lie_error(errc::invalid_argument, "irreducible_sl2: m >= 1");
  const MatrixAlgebra sl2 = classical("sl", 2);
  // Basis order of sl(2) is (E12, E21, H1); weights lam = m-1, lam-2, ...
  const int lam = m - 1;
  Mat e(m, m), f(m, m), h(m, m);
  for (int j = 0; j < m; ++j) {
    h.at(j, j) = lam - 2 * j;
    if (j + 1 < m) f.at(j + 1, j) = 1;
    if (j > 0) e.at(j - 1, j) = Rational(j) * Rational(lam - j + 1);
  }
  return Representation::make(sl2.algebra, {e, f, h});
}

Representation adjoint_rep(const LieAlgebra& g) {
  std::vector<Mat> actions;
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = zero_vec(g.dim());
    ei[i] = 1;
    actions.push_back(g.ad(ei));
  }
  return Representation::make(g, std::move(actions));
}

Representation trivial_rep(const LieAlgebra& q, int module_dim) {
  return Representation::make(
      q, std::vector<Mat>(q.dim(), Mat(module_dim, module_dim)), module_dim);
}

Representation rep_on_invariant(const LieAlgebra& g, const Subspace& acting,
                                const Subspace& module) {
  const LieAlgebra sub = subalgebra(g, acting);
  std::vector<Mat> actions;
  for (int i = 0; i < acting.dim(); ++i) {
    Mat m(module.dim(), module.dim());
    for (int j = 0; j < module.dim(); ++j) {
      const Vec w =
          g.bracket(acting.basis_vector(i), module.basis_vector(j));
      const auto coords = solve(module.basis(), w);
      if (!coords)
        throw lie_error(errc::invalid_argument,
                        "subspace is not invariant under the action");
      for (int r = 0; r < module.dim(); ++r) m.at(r, j) = (*coords)[r];
    }
    actions.push_back(std::move(m));
  }
  return Representation::make(sub, std::move(actions));
}

Representation rep_on_ideal(const LieAlgebra& g, const Subspace& a) {
  return rep_on_invariant(g, Subspace::full(g.dim()), a);
}

Representation rep_on_quotient_module(const LieAlgebra& g, const Subspace& h) {
  const LieAlgebra sub = subalgebra(g, h);
  const VectorComplement vc = vector_complement(g, h);
  std::vector<Mat> actions;
  for (int i = 0; i < h.dim(); ++i)
    actions.push_back(vc.projection * g.ad(h.basis_vector(i)) * vc.complement);
  return Representation::make(sub, std::move(actions));
}

Subspace triangular_part(const MatrixAlgebra& a, TriangularPart part) {
  auto forbidden = [&](int r, int c) {
    switch (part) {
      case TriangularPart::upper: return r > c;
      case TriangularPart::strict_upper: return r >= c;
      case TriangularPart::diagonal: return r != c;
      case TriangularPart::lower: return r < c;
      case TriangularPart::strict_lower: return r <= c;
    }
    return true;
  };
  Mat rows(0, a.dim());
  for (int r = 0; r < a.n; ++r)
    for (int c = 0; c < a.n; ++c) {
      if (!forbidden(r, c)) continue;
      Mat row(1, a.dim());
      for (int k = 0; k < a.dim(); ++k)
        row.at(0, k) = a.flat_basis.at(r * a.n + c, k);
      rows = vstack(rows, row);
    }
  return Subspace(a.dim(), kernel_basis(rows));
}

Subspace antisymmetric_part(const MatrixAlgebra& a) {
  // x + x^T = 0 read entrywise on the upper triangle.
  Mat rows(0, a.dim());
  for (int r = 0; r < a.n; ++r)
    for (int c = r; c < a.n; ++c) {
      Mat row(1, a.dim());
      for (int k = 0; k < a.dim(); ++k)
        row.at(0, k) =
            a.flat_basis.at(r * a.n + c, k) + a.flat_basis.at(c * a.n + r, k);
      rows = vstack(rows, row);
    }
  return Subspace(a.dim(), kernel_basis(rows));
}

Subspace block_upper_part(const MatrixAlgebra& a,
                          const std::vector<int>& composition, bool strict) {
  int total = 0;
  std::vector<int> block_of;
  for (size_t b = 0; b < composition.size(); ++b) {
    if (composition[b] < 1)
      throw lie_error(errc::invalid_argument, "composition parts must be >= 1");
    for (int i = 0; i < composition[b]; ++i)
      block_of.push_back(static_cast<int>(b));
    total += composition[b];
  }
  if (total != a.n)
    throw lie_error(errc::invalid_argument, "composition must sum to n");
  Mat rows(0, a.dim());
  for (int r = 0; r < a.n; ++r)
    for (int c = 0; c < a.n; ++c) {
      const bool forbidden = strict ? block_of[r] >= block_of[c]
                                    : block_of[r] > block_of[c];
      if (!forbidden) continue;
      Mat row(1, a.dim());
      for (int k = 0; k < a.dim(); ++k)
        row.at(0, k) = a.flat_basis.at(r * a.n + c, k);
      rows = vstack(rows, row);
    }
  return Subspace(a.dim(), kernel_basis(rows));
}

bool is_nilpotent_matrix(const Mat& e) {
  if (e.rows() != e.cols()) return false;
  Mat p = e;
  for (int k = 1; k <= e.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * e;
  }
  return p.is_zero();
}

int nilpotency_degree(const Mat& e) {
  if (!is_nilpotent_matrix(e) || e.is_zero())
    throw lie_error(errc::not_nilpotent,
                    "nilpotency degree needs a nonzero nilpotent matrix");
  int r = 1;
  Mat p = e;
  for (;;) {
    const Mat next = p * e;
    if (next.is_zero()) return r;
    p = next;
    ++r;
  }
}

Mat grading_element(const Mat& e) {
  const int n = e.rows();
  if (n != e.cols())
    throw lie_error(errc::invalid_argument, "grading_element: square matrix");
  if (!is_nilpotent_matrix(e) || e.is_zero())
    throw lie_error(errc::not_nilpotent,
                    "grading_element requires a nonzero nilpotent matrix");
  // [h, e] = 2e as a linear system on the entries of h.
  Mat t(n * n, n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k) {
        t.at(r * n + c, r * n + k) += e.at(k, c);  // (h e)_{rc}
        t.at(r * n + c, k * n + c) -= e.at(r, k);  // (e h)_{rc}
      }
  const auto sol = solve(t, flatten(e.scaled(Rational(2))));
  if (!sol)
    throw lie_error(errc::invalid_argument,
                    "no grading element found for the given matrix");
  Mat h(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h.at(r, c) = (*sol)[r * n + c];
  const Rational shift = h.trace() / Rational(n);
  for (int i = 0; i < n; ++i) h.at(i, i) -= shift;
  return h;
}

}  // namespace lieindex
