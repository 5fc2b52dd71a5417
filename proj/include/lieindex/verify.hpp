#ifndef LIEINDEX_VERIFY_HPP
#define LIEINDEX_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieindex/index.hpp"
#include "lieindex/json_io.hpp"

namespace lieindex {

enum class Verdict { holds, fails, equality, inequality_strict, inconclusive };

std::string verdict_name(Verdict v);

/// Machine-readable result of one executable claim. The quantities carry
/// every exact value the verdict is derived from, so a report can be
/// re-checked without re-running.
struct ClaimReport {
  std::string claim_id;
  std::string inputs;
  ojson quantities = ojson::object();
  Verdict verdict = Verdict::inconclusive;
  ojson witness = ojson::object();

  ojson to_json() const;
};

/// h^{l1} = a^{l0} + g^l for an ideal a, checked as exact subspace equality
/// at `samples` forms l, including degenerate ones. The statement is an
/// identity, not a generic one, so every sample must pass.
ClaimReport check_key_identity(const std::string& claim_id,
                               const std::string& inputs, const LieAlgebra& g,
                               const Subspace& a, int samples, uint64_t seed);

/// ind(g) + ind(a) <= dim(g/a) + 2 ind(g,a); verdict `equality` or
/// `inequality_strict` when it holds, `fails` on a violation.
ClaimReport check_panyushev(const std::string& claim_id,
                            const std::string& inputs, const LieAlgebra& g,
                            const Subspace& a, const GenericRankConfig& cfg);

/// The equality-case criteria at shared generic witnesses. For any ideal:
/// the bound-saturation test and the identity a^{l0} + g^l = a^l together
/// with subordination of a^l. For an abelian ideal additionally the
/// polarization forms, orbit-dimension doubling, and (when a complement
/// subalgebra is supplied) abelianity of the generic stabilizer. All
/// evaluated criteria must agree pairwise.
ClaimReport check_equality_criteria(const std::string& claim_id,
                                    const std::string& inputs,
                                    const LieAlgebra& g, const Subspace& a,
                                    const std::optional<Subspace>& complement,
                                    const GenericRankConfig& cfg,
                                    int samples = 4);

/// Full centralizer/normalizer analysis of a nonzero nilpotent e in sl(n):
/// z = centralizer(e), eta = normalizer(z), delta = center(z). Emits one
/// claim per checked statement, prefixed with `prefix`.
std::vector<ClaimReport> analyze_nilpotent(const std::string& prefix,
                                           const std::string& inputs,
                                           const MatrixAlgebra& sl,
                                           const Mat& e,
                                           const GenericRankConfig& cfg);

/// ind(g) <= ind((g/k) ⋉ k); optionally pins the contraction's index.
ClaimReport check_contraction(const std::string& claim_id,
                              const std::string& inputs, const LieAlgebra& g,
                              const Subspace& k, const GenericRankConfig& cfg,
                              std::optional<int> expected_contraction_index);

/// For g = g0 ⊕ g1 (two subalgebras): does ind(g) = ind(g0) + ind(g1)?
/// `holds` when additive, `fails` otherwise (which is the expected verdict
/// for the gl(4) counterexample).
ClaimReport check_additivity(const std::string& claim_id,
                             const std::string& inputs, const LieAlgebra& g,
                             const Subspace& g0, const Subspace& g1,
                             const GenericRankConfig& cfg);

/// z(J^p) in gl(n) for p | n: block-Toeplitz shape, bracket isomorphism
/// with the generalized Takiff algebra q ⊗ C[t]/(t^k) for q = gl(p),
/// k = n/p, and ind z = n both directly and through the Takiff model.
std::vector<ClaimReport> check_takiff_centralizer(const std::string& prefix,
                                                  int n, int p,
                                                  const GenericRankConfig& cfg);

/// Sub-regular nilpotent (Jordan type (n-1, 1)) in sl(n): direct
/// ind z = n-1; searches for an abelian non-ideal k of dimension n-1 in z
/// and pins ind((z/k) ⋉ k) = n-1. The search half may come back
/// inconclusive; the direct half may not.
ClaimReport check_subregular_contraction(const std::string& claim_id, int n,
                                         const GenericRankConfig& cfg,
                                         int search_budget = 64);

/// Empirical probes for the open questions on parabolic subalgebras of
/// sl(n), n <= 4, and the orthogonal/triangular splitting. Each instance
/// reports whether it is consistent with the conjectured pattern; no claim
/// is made about the questions themselves.
std::vector<ClaimReport> probe_questions(const GenericRankConfig& cfg);

struct CorpusPair {
  std::string name;
  LieAlgebra g;
  Subspace a;
};

/// Random solvable and nilpotent algebras (bracket-generated subalgebras of
/// upper triangular matrices, so the Jacobi identity holds by construction)
/// together with a sample of their ideals; at least `target_pairs` pairs.
std::vector<CorpusPair> random_ideal_corpus(uint64_t seed, int target_pairs);

/// The Panyushev inequality over a whole corpus; fails on the first
/// violation.
ClaimReport check_panyushev_corpus(const std::string& claim_id,
                                   const std::vector<CorpusPair>& corpus,
                                   const GenericRankConfig& cfg);

struct ContractionInstance {
  std::string name;
  LieAlgebra g;
  Subspace k;
};

/// The fixed (g, k) list the contraction monotonicity claim runs over.
std::vector<ContractionInstance> contraction_corpus();

ClaimReport check_monotonicity_corpus(
    const std::string& claim_id,
    const std::vector<ContractionInstance>& instances,
    const GenericRankConfig& cfg);

struct SuiteEntry {
  ClaimReport report;
  Verdict expected = Verdict::holds;
  bool as_expected = false;
};

struct SuiteReport {
  std::string suite_version;
  uint64_t seed = 0;
  std::vector<SuiteEntry> entries;
  bool all_expected = true;

  ojson to_json() const;
};

/// Runs every claim over the fixed instance list, deterministically for a
/// given seed. `filter` is a glob over claim ids ("*" runs everything).
SuiteReport run_suite(const GenericRankConfig& cfg, const std::string& filter);

/// Glob matcher used for suite filters ('*' and '?').
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace lieindex

#endif
