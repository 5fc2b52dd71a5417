#ifndef LIEINDEX_INDEX_HPP
#define LIEINDEX_INDEX_HPP

#include <cstdint>
#include <vector>

#include "lieindex/constructions.hpp"
#include "lieindex/liealg.hpp"
#include "lieindex/polynomial.hpp"

namespace lieindex {

struct GenericRankConfig {
  uint64_t seed = 1;
  int trials = 3;
  long coeff_bound = 1000000;
  int symbolic_threshold = 10;  // symbolic mode when rows*cols <= this
  bool force_symbolic = false;

  void check() const {
    if (trials < 1)
      throw lie_error(errc::invalid_argument, "trials must be >= 1");
    if (coeff_bound < 2)
      throw lie_error(errc::invalid_argument, "coeff_bound must be >= 2");
  }
};

/// Matrix family whose entries are affine in a tuple of parameters:
/// entry(r,c) = constant(r,c) + sum_k lambda_k * coeff_k(r,c). The type can
/// only express degree <= 1 entries, which is what the Schwartz–Zippel
/// error bound below assumes.
class LinearMatrixFamily {
 public:
  LinearMatrixFamily(int rows, int cols, int params)
      : rows_(rows), cols_(cols), params_(params), constant_(rows, cols),
        coeffs_(params, Mat(rows, cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int params() const { return params_; }

  void add_term(int r, int c, int param, const Rational& coeff) {
    coeffs_[param].at(r, c) += coeff;
  }
  void add_constant(int r, int c, const Rational& v) {
    constant_.at(r, c) += v;
  }

  Mat instantiate(const Vec& lambda) const;
  Poly entry_poly(int r, int c) const;
  bool depends_on_parameters() const;

  /// The alternating form B_l(x,y) = l([x,y]) of an algebra, with the dual
  /// coordinates of l as parameters.
  static LinearMatrixFamily bform(const LieAlgebra& g);

  /// Matrix of x -> x.l0 for the contragredient action on the module dual,
  /// rows indexed by the module basis, columns by the acting algebra:
  /// entry(i,j) = <x_j.l0, v_i> = -l0(rho(x_j) v_i).
  static LinearMatrixFamily coadjoint_action(const Representation& rho);

 private:
  int rows_, cols_, params_;
  Mat constant_;
  std::vector<Mat> coeffs_;
};

enum class RankMode { randomized, symbolic };

struct GenericRankResult {
  int rank = 0;
  Vec witness;            // parameter point achieving `rank`
  Rational error_bound;   // one-sided: P(rank < true generic rank)
  RankMode mode = RankMode::randomized;
  int trials = 0;
  uint64_t seed = 0;
};

/// Generic rank of the family. Randomized mode evaluates at `trials`
/// integer points of [-coeff_bound, coeff_bound]^p and reports the best
/// rank seen, with error bound (min(rows,cols)/(2*coeff_bound+1))^trials;
/// the report can only undershoot, never overshoot. Symbolic mode
/// eliminates over the polynomial ring and is exact.
GenericRankResult generic_rank(const LinearMatrixFamily& family,
                               const GenericRankConfig& cfg);

struct IndexReport {
  int value = 0;
  LinearForm witness;
  RankMode mode = RankMode::randomized;
  Rational error_bound;
  int trials = 0;
  uint64_t seed = 0;
};

/// ind(g) = dim g - generic rank of B_l. The witness is a regular form.
IndexReport algebra_index(const LieAlgebra& g, const GenericRankConfig& cfg);

/// Index of a representation: module_dim minus the generic dimension of an
/// orbit in the module dual.
IndexReport representation_index(const Representation& rho,
                                 const GenericRankConfig& cfg);

/// g^l = {x : l([x,y]) = 0 for all y}.
Subspace form_centralizer(const LieAlgebra& g, const LinearForm& l);

/// {x in the acting algebra : x.l0 = 0}.
Subspace stabilizer_at(const Representation& rho, const LinearForm& l0);

/// a^l = {x in g : l([x, a]) = 0}.
Subspace orthogonal_wrt_form(const LieAlgebra& g, const Subspace& a,
                             const LinearForm& l);

/// dim g.l, the coadjoint orbit dimension at l (= rank of B_l).
int orbit_dim(const LieAlgebra& g, const LinearForm& l);

/// dim of the orbit of l0 in the module dual.
int orbit_dim_rep(const Representation& rho, const LinearForm& l0);

bool is_regular(const LieAlgebra& g, const LinearForm& l,
                const GenericRankConfig& cfg);

/// l([h, h]) = 0; h must be a subalgebra.
bool is_subordinate(const LieAlgebra& g, const Subspace& h,
                    const LinearForm& l);

/// h = h^l; h must be a subalgebra.
bool is_polarization(const LieAlgebra& g, const Subspace& h,
                     const LinearForm& l);

/// Deterministic integer sampler for parameter points, shared by the
/// engine and the verification suite.
class ParamSampler {
 public:
  ParamSampler(uint64_t seed, long bound) : state_(seed), bound_(bound) {}

  Rational next();
  Vec next_point(int arity);
  uint64_t next_raw();

 private:
  uint64_t state_;
  long bound_;
};

/// Stable per-claim seed derivation (FNV-1a over the tag, mixed with the
/// master seed).
uint64_t derive_seed(uint64_t master, const std::string& tag);

}  // namespace lieindex

#endif
