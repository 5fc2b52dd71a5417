#include "doctest.h"
#include "lieindex/verify.hpp"

using namespace lieindex;

namespace {

GenericRankConfig cfg_with_seed(uint64_t seed) {
  GenericRankConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "P1.2-mautner"));
  CHECK(glob_match("P1*", "P1.2-mautner"));
  CHECK(glob_match("P?.2-*", "P1.2-mautner"));
  CHECK_FALSE(glob_match("P2*", "P1.2-mautner"));
  CHECK_FALSE(glob_match("P1.2", "P1.2-mautner"));
}

TEST_CASE("key identity holds on Mautner and degenerate ideals") {
  const MautnerAlgebra m = mautner();
  CHECK(check_key_identity("t", "", m.algebra, m.heisenberg_ideal, 24, 7)
            .verdict == Verdict::holds);
  CHECK(check_key_identity("t", "", m.algebra, Subspace::full(4), 8, 7)
            .verdict == Verdict::holds);
  const LieAlgebra sl3 = classical("sl", 3).algebra;
  CHECK(check_key_identity("t", "", sl3, Subspace::zero(8), 8, 7).verdict ==
        Verdict::holds);
  // Non-ideals are rejected.
  const TriangularDecomposition t = triangular_sl(2);
  CHECK_THROWS_AS(check_key_identity("t", "", t.sl.algebra, t.borel, 4, 7),
                  lie_error);
}

TEST_CASE("Panyushev quantities on the Mautner example") {
  const MautnerAlgebra m = mautner();
  const ClaimReport r = check_panyushev("t", "", m.algebra, m.heisenberg_ideal,
                                        cfg_with_seed(11));
  CHECK(r.verdict == Verdict::equality);
  CHECK(r.quantities["ind_g"] == 2);
  CHECK(r.quantities["ind_a"] == 1);
  CHECK(r.quantities["ind_g_a"] == 1);
  CHECK(r.quantities["lhs"] == 3);
  CHECK(r.quantities["rhs"] == 3);
}

TEST_CASE("Panyushev on the Borel / nilradical pair of sl(3)") {
  const TriangularDecomposition t = triangular_sl(3);
  const LieAlgebra b = subalgebra(t.sl.algebra, t.borel);
  std::vector<Vec> np;
  for (int i = 0; i < t.n_plus.dim(); ++i)
    np.push_back(*solve(t.borel.basis(), t.n_plus.basis_vector(i)));
  const ClaimReport r = check_panyushev(
      "t", "", b, Subspace::span_of(5, np), cfg_with_seed(13));
  CHECK(r.verdict == Verdict::equality);
  CHECK(r.quantities["lhs"] == 2);  // rank of sl(3)
}

TEST_CASE("Panyushev is strict for the Heisenberg center") {
  const LieAlgebra h3 = heisenberg(3);
  const ClaimReport r =
      check_panyushev("t", "", h3, center(h3), cfg_with_seed(17));
  CHECK(r.verdict == Verdict::inequality_strict);
  CHECK(r.quantities["ind_g_a"] == 1);  // the action on the center is zero
  CHECK(r.quantities["lhs"] == 2);
  CHECK(r.quantities["rhs"] == 4);
}

TEST_CASE("equality criteria agree on the section-3 examples") {
  const SemidirectProduct v4 = semidirect_abelian(irreducible_sl2(4));
  CHECK(check_equality_criteria("t", "", v4.algebra, v4.module_ideal,
                                v4.acting_part, cfg_with_seed(19))
            .verdict == Verdict::equality);

  const LieAlgebra h3 = heisenberg(3);
  const ClaimReport hc = check_equality_criteria("t", "", h3, center(h3),
                                                 std::nullopt, cfg_with_seed(23));
  CHECK(hc.verdict == Verdict::inequality_strict);

  const MautnerAlgebra m = mautner();
  const ClaimReport mr = check_equality_criteria(
      "t", "", m.algebra, m.heisenberg_ideal, std::nullopt, cfg_with_seed(29));
  CHECK(mr.verdict == Verdict::equality);
  CHECK(mr.quantities["abelian_ideal"] == false);

  // A complement may only accompany an abelian ideal.
  CHECK_THROWS_AS(
      check_equality_criteria("t", "", m.algebra, m.heisenberg_ideal,
                              m.line_x, cfg_with_seed(31)),
      lie_error);
}

TEST_CASE("nilpotent analysis of sl(3), e regular") {
  const MatrixAlgebra sl3 = classical("sl", 3);
  const auto claims =
      analyze_nilpotent("u", "", sl3, jordan_matrix(3), cfg_with_seed(37));
  REQUIRE(claims.size() == 9);
  for (const auto& c : claims) CHECK(c.verdict == Verdict::holds);
  // Pinned quantities: dim z = 2, dim delta = 2, ind eta = 0, and the
  // symbolic determinant 8 l2^2 (2^r r! with r = 2).
  CHECK(claims[0].quantities["dim_z"] == 2);
  CHECK(claims[0].quantities["dim_delta"] == 2);
  CHECK(claims[3].quantities["ind_eta"] == 0);
  const std::string det = claims[6].quantities["det"].get<std::string>();
  CHECK((det == "8/1*l2^2" || det == "-8/1*l2^2"));
  CHECK(claims[7].quantities["ind_eta_mod_z"] == 0);  // r = 2 even
}

TEST_CASE("nilpotent analysis of sl(4), e regular: odd case") {
  const MatrixAlgebra sl4 = classical("sl", 4);
  const auto claims =
      analyze_nilpotent("u", "", sl4, jordan_matrix(4), cfg_with_seed(41));
  for (const auto& c : claims) CHECK(c.verdict == Verdict::holds);
  CHECK(claims[7].quantities["ind_eta_mod_z"] == 1);  // r = 3 odd
}

TEST_CASE("nilpotent analysis rejects bad input") {
  const MatrixAlgebra sl3 = classical("sl", 3);
  CHECK_THROWS_AS(
      analyze_nilpotent("u", "", sl3, Mat(3, 3), cfg_with_seed(43)),
      lie_error);
  Mat semisimple(3, 3);
  semisimple.at(0, 0) = 1;
  semisimple.at(1, 1) = -1;
  CHECK_THROWS_AS(
      analyze_nilpotent("u", "", sl3, semisimple, cfg_with_seed(43)),
      lie_error);
}

TEST_CASE("contraction checks") {
  const MatrixAlgebra gl3 = classical("gl", 3);
  const ClaimReport r =
      check_contraction("t", "", gl3.algebra, antisymmetric_part(gl3),
                        cfg_with_seed(47), 3);
  CHECK(r.verdict == Verdict::equality);
  CHECK(r.quantities["ind_g"] == 3);
  CHECK(r.quantities["ind_contraction"] == 3);

  const ClaimReport full = check_contraction(
      "t", "", gl3.algebra, Subspace::full(9), cfg_with_seed(53), std::nullopt);
  CHECK(full.verdict == Verdict::equality);
}

TEST_CASE("additivity checks") {
  const MatrixAlgebra gl3 = classical("gl", 3);
  const ClaimReport r = check_additivity(
      "t", "", gl3.algebra, antisymmetric_part(gl3),
      triangular_part(gl3, TriangularPart::upper), cfg_with_seed(59));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.quantities["ind_g0"] == 1);
  CHECK(r.quantities["ind_g1"] == 2);
  CHECK(r.quantities["ind_g"] == 3);

  // The gl(4) half-rows counterexample: 0 + 0 != 4.
  const MatrixAlgebra gl4 = classical("gl", 4);
  std::vector<Vec> top, bottom;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat m(4, 4);
      m.at(i, j) = 1;
      (i < 2 ? top : bottom).push_back(gl4.coords_of(m));
    }
  const ClaimReport cx = check_additivity(
      "t", "", gl4.algebra, Subspace::span_of(16, top),
      Subspace::span_of(16, bottom), cfg_with_seed(61));
  CHECK(cx.verdict == Verdict::fails);
  CHECK(cx.quantities["ind_g0"] == 0);
  CHECK(cx.quantities["ind_g1"] == 0);
  CHECK(cx.quantities["ind_g"] == 4);

  // Overlapping subalgebras are not a decomposition.
  CHECK_THROWS_AS(
      check_additivity("t", "", gl3.algebra, antisymmetric_part(gl3),
                       antisymmetric_part(gl3), cfg_with_seed(67)),
      lie_error);
}

TEST_CASE("Takiff centralizer checks incl. the e = 0 edge") {
  for (const auto& c : check_takiff_centralizer("t", 4, 2, cfg_with_seed(71)))
    CHECK(c.verdict == Verdict::holds);
  // p = n: J^n = 0, z = gl(n), k = 1 Takiff is gl(n) itself.
  for (const auto& c : check_takiff_centralizer("t", 3, 3, cfg_with_seed(73)))
    CHECK(c.verdict == Verdict::holds);
  // p = 1: the regular nilpotent, z the polynomials in J, abelian of dim 4.
  const auto regular = check_takiff_centralizer("t", 4, 1, cfg_with_seed(79));
  for (const auto& c : regular) CHECK(c.verdict == Verdict::holds);
  CHECK_THROWS_AS(check_takiff_centralizer("t", 4, 3, cfg_with_seed(83)),
                  lie_error);
}

TEST_CASE("sub-regular contraction for sl(3)") {
  const ClaimReport r =
      check_subregular_contraction("t", 3, cfg_with_seed(89));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.quantities["dim_z"] == 4);
  CHECK(r.quantities["ind_z_direct"] == 2);
  CHECK(r.quantities["ind_contraction"] == 2);
}

TEST_CASE("sub-regular case split: an ideal k contracts to index r + 2") {
  // z(e) for e of Jordan type (2,1) in sl(3) has basis {e, E23, E31, t}
  // with t = diag(1,1,-2); span(e, E23) is an abelian ideal of z, and the
  // contraction along an ideal lands in the d = 0 branch.
  const MatrixAlgebra sl3 = classical("sl", 3);
  Mat e(3, 3);
  e.at(1, 0) = 1;
  const Subspace z =
      centralizer(sl3.algebra, Subspace::span_of(8, {sl3.coords_of(e)}));
  REQUIRE(z.dim() == 4);
  const LieAlgebra z_alg = subalgebra(sl3.algebra, z);
  Mat e23(3, 3);
  e23.at(1, 2) = 1;
  const Subspace k = Subspace::span_of(
      4, {*solve(z.basis(), sl3.coords_of(e)),
          *solve(z.basis(), sl3.coords_of(e23))});
  REQUIRE(is_ideal(z_alg, k));
  REQUIRE(is_abelian(z_alg, k));
  const SemidirectProduct iw = inonu_wigner(z_alg, k);
  CHECK(algebra_index(iw.algebra, cfg_with_seed(91)).value == 4);  // r + 2
}

TEST_CASE("probes stay consistent on the established cases") {
  const auto probes = probe_questions(cfg_with_seed(97));
  bool saw_borel = false, saw_max = false;
  for (const auto& c : probes) {
    if (c.claim_id == "Q7-sl3-p111") {
      saw_borel = true;
      CHECK(c.verdict == Verdict::holds);
    }
    if (c.claim_id == "Q7-sl4-p31") {
      saw_max = true;
      CHECK(c.verdict == Verdict::holds);
    }
  }
  CHECK(saw_borel);
  CHECK(saw_max);
}

TEST_CASE("suite filtering and determinism") {
  GenericRankConfig cfg = cfg_with_seed(101);
  const SuiteReport p1 = run_suite(cfg, "P1*");
  CHECK(p1.entries.size() > 0);
  for (const auto& e : p1.entries)
    CHECK(e.report.claim_id.substr(0, 2) == "P1");
  CHECK(p1.all_expected);

  const std::string once = run_suite(cfg, "P1.2-mautner").to_json().dump(2);
  const std::string twice = run_suite(cfg, "P1.2-mautner").to_json().dump(2);
  CHECK(once == twice);
}

TEST_CASE("random corpus produces valid ideal pairs") {
  const auto corpus = random_ideal_corpus(7, 40);
  CHECK(corpus.size() >= 40);
  for (size_t i = 0; i < 5; ++i) {
    CHECK_FALSE(validate(corpus[i].g).has_value());
    CHECK(is_ideal(corpus[i].g, corpus[i].a));
    CHECK(corpus[i].g.dim() <= 8);
  }
}
