#ifndef LIEINDEX_CONSTRUCTIONS_HPP
#define LIEINDEX_CONSTRUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/liealg.hpp"

namespace lieindex {

/// Linear action of an algebra on a finite-dimensional module, one action
/// matrix per algebra basis vector. The homomorphism property
/// rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) is checked on every basis pair
/// before an instance can exist.
struct Representation {
  LieAlgebra algebra;
  int module_dim;
  std::vector<Mat> actions;

  /// module_dim is inferred from the action matrices when any exist; it
  /// must be passed explicitly for a zero-dimensional acting algebra.
  static Representation make(LieAlgebra algebra, std::vector<Mat> actions,
                             int module_dim = -1);

  /// Action matrix of an arbitrary element.
  Mat act(const Vec& x) const;
};

/// Lie algebra realized by explicit matrices; keeps the realization so
/// elements can move between coordinates and matrices exactly.
struct MatrixAlgebra {
  LieAlgebra algebra;
  int n = 0;                    // matrices are n x n
  std::vector<Mat> basis_mats;
  Mat flat_basis;               // n^2 x dim, columns are vec(basis)

  int dim() const { return algebra.dim(); }
  Mat matrix_of(const Vec& coords) const;
  std::optional<Vec> try_coords_of(const Mat& m) const;
  Vec coords_of(const Mat& m) const;  // throws if m is outside the span
};

/// Structure constants computed from commutators of the given matrices.
MatrixAlgebra matrix_algebra(std::vector<Mat> basis,
                             std::vector<std::string> labels);

/// gl(n), sl(n), so(n) (antisymmetric matrices), sp(2n) (standard
/// symplectic form [[0, I], [-I, 0]]); `param` is n, resp. 2n for sp.
MatrixAlgebra classical(const std::string& name, int param);

MatrixAlgebra borel_gl(int n);       // upper triangular in gl(n)
MatrixAlgebra strict_upper(int n);   // strictly upper triangular

struct TriangularDecomposition {
  MatrixAlgebra sl;
  Subspace n_minus, cartan, n_plus, borel;
};
TriangularDecomposition triangular_sl(int n);

LieAlgebra heisenberg(int dim);  // dim = 2m+1

struct MautnerAlgebra {
  LieAlgebra algebra;       // basis (P, Q, E, X)
  Subspace heisenberg_ideal;  // span(P, Q, E)
  Subspace line_x;            // span(X)
};
MautnerAlgebra mautner();

/// The n x n Jordan matrix (ones on the subdiagonal) and its powers.
Mat jordan_matrix(int n);
Mat jordan_power(int n, int p);

/// Coordinates of J^p against the gl(n) basis; requires 1 <= p <= n.
Vec jordan_nilpotent(int n, int p);

/// V ⋉ q for a module V made abelian: [(v1,x1),(v2,x2)] =
/// (x1.v2 - x2.v1, [x1,x2]). Module vectors come first in the basis.
struct SemidirectProduct {
  LieAlgebra algebra;
  Subspace module_ideal;  // abelian ideal V
  Subspace acting_part;   // the complement subalgebra q
};
SemidirectProduct semidirect_abelian(const Representation& rho);

/// q ⊗ C[t]/(t^k) with the truncated polynomial bracket.
LieAlgebra generalized_takiff(const LieAlgebra& q, int k);

/// Inönü–Wigner contraction (g/k) ⋉ k for a subalgebra k; g/k is
/// abelianized and k acts through the quotient of the adjoint action.
SemidirectProduct inonu_wigner(const LieAlgebra& g, const Subspace& k);

/// The m-dimensional irreducible representation of sl(2) on the standard
/// weight basis.
Representation irreducible_sl2(int m);

Representation adjoint_rep(const LieAlgebra& g);
Representation trivial_rep(const LieAlgebra& q, int module_dim);

/// Action of `acting` on the invariant subspace `module` ([acting, module]
/// must stay inside `module`), expressed in module coordinates.
Representation rep_on_invariant(const LieAlgebra& g, const Subspace& acting,
                                const Subspace& module);

/// g acting on an ideal a.
Representation rep_on_ideal(const LieAlgebra& g, const Subspace& a);

/// Subalgebra h acting on the module g/h.
Representation rep_on_quotient_module(const LieAlgebra& g, const Subspace& h);

// --- Distinguished subspaces of matrix realizations -----------------------

enum class TriangularPart { upper, strict_upper, diagonal, lower, strict_lower };

/// Elements of the realization supported on the given triangular region.
Subspace triangular_part(const MatrixAlgebra& a, TriangularPart part);

/// Elements x of the realization with x + x^T = 0.
Subspace antisymmetric_part(const MatrixAlgebra& a);

/// Block upper-triangular part for the given composition of n (a parabolic
/// when applied to gl/sl); strict = true drops the diagonal blocks (the
/// nilradical).
Subspace block_upper_part(const MatrixAlgebra& a,
                          const std::vector<int>& composition,
                          bool strict = false);

/// Solves [h, e] = 2 e for a nilpotent matrix e and normalizes h to trace
/// zero. This is the grading element behind the e, e^2, ..., e^r ladder.
Mat grading_element(const Mat& e);

bool is_nilpotent_matrix(const Mat& e);

/// Largest r with e^r != 0 (e nilpotent, e != 0).
int nilpotency_degree(const Mat& e);

}  // namespace lieindex

#endif
