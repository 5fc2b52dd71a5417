#include <functional>

#include "doctest.h"
#include "lieindex/constructions.hpp"
#include "lieindex/index.hpp"

using namespace lieindex;

namespace {

GenericRankConfig cfg_with_seed(uint64_t seed) {
  GenericRankConfig c;
  c.seed = seed;
  return c;
}

/// Test-side oracle: generic rank of a symbolic matrix as the largest k
/// with a nonzero k x k minor, computed by brute-force expansion. Stays
/// independent of the engine's elimination path.
int minor_rank_oracle(const LinearMatrixFamily& fam) {
  const int n = std::min(fam.rows(), fam.cols());
  std::vector<std::vector<Poly>> m(fam.rows(),
                                   std::vector<Poly>(fam.cols(), Poly(fam.params())));
  for (int r = 0; r < fam.rows(); ++r)
    for (int c = 0; c < fam.cols(); ++c) m[r][c] = fam.entry_poly(r, c);
  auto det_of = [&](const std::vector<int>& rows, const std::vector<int>& cols,
                    auto&& self) -> Poly {
    if (rows.empty()) return Poly::constant(fam.params(), 1);
    Poly acc(fam.params());
    for (size_t ci = 0; ci < cols.size(); ++ci) {
      const Poly& e = m[rows[0]][cols[ci]];
      if (e.is_zero()) continue;
      std::vector<int> rrest(rows.begin() + 1, rows.end());
      std::vector<int> crest;
      for (size_t cj = 0; cj < cols.size(); ++cj)
        if (cj != ci) crest.push_back(cols[cj]);
      const Poly sub = self(rrest, crest, self);
      acc = ci % 2 == 0 ? acc + e * sub : acc - e * sub;
    }
    return acc;
  };
  for (int k = n; k >= 1; --k) {
    // All k x k minors.
    std::vector<int> rsel(k), csel(k);
    std::function<bool(int, int)> pick_rows = [&](int start, int depth) {
      if (depth == k) {
        std::function<bool(int, int)> pick_cols = [&](int cstart, int cdepth) {
          if (cdepth == k) {
            std::vector<int> rows(rsel.begin(), rsel.end()),
                cols(csel.begin(), csel.end());
            return !det_of(rows, cols, det_of).is_zero();
          }
          for (int c = cstart; c < fam.cols(); ++c) {
            csel[cdepth] = c;
            if (pick_cols(c + 1, cdepth + 1)) return true;
          }
          return false;
        };
        return pick_cols(0, 0);
      }
      for (int r = start; r < fam.rows(); ++r) {
        rsel[depth] = r;
        if (pick_rows(r + 1, depth + 1)) return true;
      }
      return false;
    };
    if (pick_rows(0, 0)) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("generic rank of the pinned families") {
  LinearMatrixFamily alt(2, 2, 1);
  alt.add_term(0, 1, 0, 1);
  alt.add_term(1, 0, 0, -1);
  const auto r = generic_rank(alt, cfg_with_seed(3));
  CHECK(r.rank == 2);
  CHECK(r.mode == RankMode::symbolic);  // 4 entries <= threshold 10
  CHECK(!is_zero(r.witness[0]));

  // Constant zero family above the symbolic threshold: exact, zero bound.
  LinearMatrixFamily zero(4, 4, 2);
  const auto z = generic_rank(zero, cfg_with_seed(3));
  CHECK(z.rank == 0);
  CHECK(z.error_bound == 0);
}

TEST_CASE("Heisenberg B-form has generic rank 2 (oracle first)") {
  const LieAlgebra h3 = heisenberg(3);
  const auto fam = LinearMatrixFamily::bform(h3);
  REQUIRE(minor_rank_oracle(fam) == 2);  // the frozen oracle value
  const auto r = generic_rank(fam, cfg_with_seed(5));
  CHECK(r.rank == 2);
  CHECK(r.error_bound == 0);
}

TEST_CASE("indices of the named examples") {
  CHECK(algebra_index(mautner().algebra, cfg_with_seed(7)).value == 2);
  CHECK(algebra_index(heisenberg(3), cfg_with_seed(7)).value == 1);
  CHECK(algebra_index(classical("so", 4).algebra, cfg_with_seed(7)).value == 2);
}

TEST_CASE("representation indices of the named examples") {
  const MautnerAlgebra m = mautner();
  CHECK(representation_index(rep_on_ideal(m.algebra, m.heisenberg_ideal),
                             cfg_with_seed(11))
            .value == 1);

  for (int n = 2; n <= 5; ++n) {
    const TriangularDecomposition t = triangular_sl(n);
    const LieAlgebra b = subalgebra(t.sl.algebra, t.borel);
    std::vector<Vec> np;
    for (int i = 0; i < t.n_plus.dim(); ++i)
      np.push_back(*solve(t.borel.basis(), t.n_plus.basis_vector(i)));
    const Representation rho =
        rep_on_ideal(b, Subspace::span_of(t.borel.dim(), np));
    CHECK(representation_index(rho, cfg_with_seed(13 + n)).value == 0);
  }

  const MatrixAlgebra sl3 = classical("sl", 3);
  const Mat j = jordan_matrix(3);
  const Vec e = sl3.coords_of(j);
  const Subspace z = centralizer(sl3.algebra, Subspace::span_of(8, {e}));
  const Subspace eta = normalizer(sl3.algebra, z);
  const Subspace delta = center_of(sl3.algebra, z);
  const Representation rho = rep_on_invariant(sl3.algebra, eta, delta);
  CHECK(representation_index(rho, cfg_with_seed(17)).value == 0);
}

TEST_CASE("form centralizers") {
  const LieAlgebra sl2 = classical("sl", 2).algebra;
  CHECK(form_centralizer(sl2, LinearForm(zero_vec(3))) == Subspace::full(3));

  const LieAlgebra ab = LieAlgebra::make(4, {}, {});
  ParamSampler s(19, 50);
  CHECK(form_centralizer(ab, LinearForm(s.next_point(4))) == Subspace::full(4));

  // sl(2) basis order (E12, E21, H1): the form dual to H has centralizer
  // spanned by H.
  Vec dual_h = zero_vec(3);
  dual_h[2] = 1;
  const Subspace c = form_centralizer(sl2, LinearForm(dual_h));
  CHECK(c.dim() == 1);
  Vec h = zero_vec(3);
  h[2] = 1;
  CHECK(c.contains(h));
}

TEST_CASE("stabilizers") {
  const Representation rho = irreducible_sl2(4);
  CHECK(stabilizer_at(rho, LinearForm(zero_vec(4))) == Subspace::full(3));
  const IndexReport rep = representation_index(rho, cfg_with_seed(23));
  // Generic orbits fill a 3-dimensional piece of the 4-dimensional dual:
  // the index is 1 while the generic stabilizer is trivial.
  CHECK(rep.value == 1);
  CHECK(stabilizer_at(rho, rep.witness).dim() == 0);

  // eta acting on delta for the regular nilpotent of sl(3): at a form with
  // <l0, e^r> != 0 the stabilizer is exactly z.
  const MatrixAlgebra sl3 = classical("sl", 3);
  const Mat j = jordan_matrix(3);
  const Vec e = sl3.coords_of(j);
  const Subspace z = centralizer(sl3.algebra, Subspace::span_of(8, {e}));
  const Subspace eta = normalizer(sl3.algebra, z);
  const Subspace delta = center_of(sl3.algebra, z);
  const Representation rho_d = rep_on_invariant(sl3.algebra, eta, delta);
  const IndexReport rd = representation_index(rho_d, cfg_with_seed(29));
  const Subspace stab = stabilizer_at(rho_d, rd.witness);
  // Map z into eta coordinates for the comparison.
  std::vector<Vec> zc;
  for (int i = 0; i < z.dim(); ++i)
    zc.push_back(*solve(eta.basis(), z.basis_vector(i)));
  CHECK(stab == Subspace::span_of(eta.dim(), zc));
}

TEST_CASE("orthogonals with respect to B_l") {
  const MautnerAlgebra m = mautner();
  ParamSampler s(31, 1000);
  const LinearForm l(s.next_point(4));
  CHECK(orthogonal_wrt_form(m.algebra, Subspace::zero(4), l) ==
        Subspace::full(4));
  CHECK(orthogonal_wrt_form(m.algebra, Subspace::full(4), l) ==
        form_centralizer(m.algebra, l));

  // Mautner with a = span(P,Q,E) at a generic form: dim a^l = dim(g/a) +
  // codim(g.l0) = 1 + 1 = 2, matching the dimension formula exactly.
  const Subspace al = orthogonal_wrt_form(m.algebra, m.heisenberg_ideal, l);
  const Representation rho = rep_on_ideal(m.algebra, m.heisenberg_ideal);
  const int codim = 3 - orbit_dim_rep(rho, l.restricted_to(m.heisenberg_ideal));
  CHECK(al.dim() == 1 + codim);
  CHECK(al.dim() == 2);
}

TEST_CASE("subordination and polarization predicates") {
  const TriangularDecomposition t3 = triangular_sl(3);
  ParamSampler s(37, 500);
  const LinearForm l(s.next_point(8));
  CHECK(is_subordinate(t3.sl.algebra, t3.cartan, l));  // abelian, always

  const MautnerAlgebra m = mautner();
  const LinearForm lm(s.next_point(4));
  const Subspace al = orthogonal_wrt_form(m.algebra, m.heisenberg_ideal, lm);
  CHECK(is_subordinate(m.algebra, al, lm));
  // a^l here coincides with g^l and is strictly smaller than its own
  // orthogonal, so it is not a polarization.
  CHECK(al == form_centralizer(m.algebra, lm));
  CHECK_FALSE(is_polarization(m.algebra, al, lm));

  // h = g is a polarization iff l kills [g, g].
  const LieAlgebra ab = LieAlgebra::make(3, {}, {});
  CHECK(is_polarization(ab, Subspace::full(3), LinearForm(s.next_point(3))));
  CHECK_FALSE(
      is_polarization(t3.sl.algebra, Subspace::full(8), l));
}

TEST_CASE("sampling can only undershoot the generic rank") {
  const LieAlgebra g = classical("sl", 3).algebra;
  const auto fam = LinearMatrixFamily::bform(g);
  const auto res = generic_rank(fam, cfg_with_seed(41));
  ParamSampler s(43, 1000000);
  for (int rep = 0; rep < 20; ++rep)
    CHECK(rank(fam.instantiate(s.next_point(8))) <= res.rank);
  CHECK(rank(fam.instantiate(res.witness)) == res.rank);
}

TEST_CASE("index is invariant under change of basis") {
  const std::vector<LieAlgebra> corpus = {
      mautner().algebra, heisenberg(5), classical("sl", 3).algebra,
      generalized_takiff(classical("sl", 2).algebra, 2)};
  ParamSampler s(47, 3);
  for (const LieAlgebra& g : corpus) {
    const int ind = algebra_index(g, cfg_with_seed(53)).value;
    for (int rep = 0; rep < 3; ++rep) {
      Mat t(g.dim(), g.dim());
      do {
        for (int i = 0; i < g.dim(); ++i)
          for (int j = 0; j < g.dim(); ++j) t.at(i, j) = s.next();
      } while (rank(t) < g.dim());
      CHECK(algebra_index(change_basis(g, t), cfg_with_seed(59 + rep)).value ==
            ind);
    }
  }
}

TEST_CASE("reference indices: abelian, sl(2), gl(n)") {
  CHECK(algebra_index(LieAlgebra::make(6, {}, {}), cfg_with_seed(61)).value == 6);
  CHECK(algebra_index(classical("sl", 2).algebra, cfg_with_seed(61)).value == 1);
  for (int n = 1; n <= 4; ++n)
    CHECK(algebra_index(classical("gl", n).algebra, cfg_with_seed(61)).value ==
          n);
}

TEST_CASE("adjoint semidirect product doubles the index") {
  const LieAlgebra sl2 = classical("sl", 2).algebra;
  const SemidirectProduct sd = semidirect_abelian(adjoint_rep(sl2));
  CHECK(sd.algebra.dim() == 6);
  CHECK(algebra_index(sd.algebra, cfg_with_seed(63)).value == 2);
}

TEST_CASE("witness regularity and parity, every call") {
  const std::vector<LieAlgebra> corpus = {
      mautner().algebra, heisenberg(3), classical("so", 5).algebra,
      borel_gl(4).algebra};
  for (const LieAlgebra& g : corpus) {
    const IndexReport r = algebra_index(g, cfg_with_seed(67));
    CHECK((g.dim() - r.value) % 2 == 0);
    CHECK(form_centralizer(g, r.witness).dim() == r.value);
  }
}

TEST_CASE("randomized and symbolic modes agree on the corpus") {
  const std::vector<LieAlgebra> corpus = {
      mautner().algebra, heisenberg(3), classical("sl", 2).algebra,
      classical("so", 4).algebra};
  for (const LieAlgebra& g : corpus) {
    GenericRankConfig sym = cfg_with_seed(71);
    sym.force_symbolic = true;
    GenericRankConfig rnd = cfg_with_seed(73);
    rnd.symbolic_threshold = 0;
    const IndexReport a = algebra_index(g, sym);
    const IndexReport b = algebra_index(g, rnd);
    CHECK(a.mode == RankMode::symbolic);
    CHECK(a.error_bound == 0);
    CHECK(b.mode == RankMode::randomized);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("contraction of sl(2) along its Cartan line has index 1") {
  const TriangularDecomposition t = triangular_sl(2);
  const SemidirectProduct iw = inonu_wigner(t.sl.algebra, t.cartan);
  CHECK(iw.algebra.dim() == 3);
  // Oracle first: the 3x3 alternating family of the contraction has
  // generic rank 2 by the symbolic minor expansion, so the index is 1.
  const auto fam = LinearMatrixFamily::bform(iw.algebra);
  REQUIRE(minor_rank_oracle(fam) == 2);
  GenericRankConfig cfg = cfg_with_seed(89);
  cfg.force_symbolic = true;
  CHECK(algebra_index(iw.algebra, cfg).value == 1);
}

TEST_CASE("configuration bounds are enforced") {
  GenericRankConfig cfg = cfg_with_seed(97);
  cfg.trials = 0;
  CHECK_THROWS_AS(algebra_index(heisenberg(3), cfg), lie_error);
  cfg.trials = 3;
  cfg.coeff_bound = 1;
  CHECK_THROWS_AS(algebra_index(heisenberg(3), cfg), lie_error);
}

TEST_CASE("error bound formula") {
  // Non-full-rank family above the symbolic cutoff: the Schwartz–Zippel
  // bound (r/(2B+1))^t is reported verbatim.
  LinearMatrixFamily fam(4, 4, 1);
  fam.add_term(0, 1, 0, 1);
  fam.add_term(1, 0, 0, -1);
  GenericRankConfig cfg = cfg_with_seed(79);
  cfg.coeff_bound = 50;
  cfg.trials = 2;
  cfg.symbolic_threshold = 0;
  const auto r = generic_rank(fam, cfg);
  CHECK(r.rank == 2);
  CHECK(r.error_bound == Rational(4 * 4, 101 * 101));

  // Full rank reached: the report cannot be an undercount.
  LinearMatrixFamily full(2, 2, 2);
  full.add_term(0, 0, 0, 1);
  full.add_term(1, 1, 1, 1);
  GenericRankConfig cfg2 = cfg_with_seed(83);
  cfg2.symbolic_threshold = 0;
  const auto f = generic_rank(full, cfg2);
  CHECK(f.rank == 2);
  CHECK(f.error_bound == 0);
}
