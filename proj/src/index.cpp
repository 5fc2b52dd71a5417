#include "lieindex/index.hpp"

#include <algorithm>

#include "lieindex/elimination.hpp"

namespace lieindex {

Mat LinearMatrixFamily::instantiate(const Vec& lambda) const {
  if (static_cast<int>(lambda.size()) != params_)
    throw lie_error(errc::dimension_mismatch, "family arity");
  Mat m = constant_;
  for (int k = 0; k < params_; ++k)
    if (!is_zero(lambda[k])) m = m + coeffs_[k].scaled(lambda[k]);
  return m;
}

Poly LinearMatrixFamily::entry_poly(int r, int c) const {
  Poly p = Poly::constant(params_, constant_.at(r, c));
  for (int k = 0; k < params_; ++k) {
    const Rational& q = coeffs_[k].at(r, c);
    if (!is_zero(q)) p = p + Poly::variable(params_, k).scaled(q);
  }
  return p;
}

bool LinearMatrixFamily::depends_on_parameters() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [](const Mat& m) { return !m.is_zero(); });
}

LinearMatrixFamily LinearMatrixFamily::bform(const LieAlgebra& g) {
  LinearMatrixFamily fam(g.dim(), g.dim(), g.dim());
  for (const auto& [ij, terms] : g.brackets()) {
    const auto [i, j] = ij;
    for (const auto& [k, c] : terms) {
      fam.add_term(i, j, k, c);
      fam.add_term(j, i, k, -c);
    }
  }
  return fam;
}

LinearMatrixFamily LinearMatrixFamily::coadjoint_action(
    const Representation& rho) {
  LinearMatrixFamily fam(rho.module_dim, rho.algebra.dim(), rho.module_dim);
  for (int j = 0; j < rho.algebra.dim(); ++j)
    for (int i = 0; i < rho.module_dim; ++i)
      for (int v = 0; v < rho.module_dim; ++v) {
        const Rational& c = rho.actions[j].at(v, i);
        if (!is_zero(c)) fam.add_term(i, j, v, -c);
      }
  return fam;
}

Rational ParamSampler::next() {
  const uint64_t span = 2 * static_cast<uint64_t>(bound_) + 1;
  const uint64_t raw = next_raw() % span;
  return Rational(static_cast<long>(raw) - bound_);
}

Vec ParamSampler::next_point(int arity) {
  Vec v(arity);
  for (int i = 0; i < arity; ++i) v[i] = next();
  return v;
}

uint64_t ParamSampler::next_raw() {
  // splitmix64; stable across platforms, unlike the std distributions.
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, const std::string& tag) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h ^ (master * 0x9e3779b97f4a7c15ULL);
}

namespace {

int symbolic_rank(const LinearMatrixFamily& fam) {
  std::vector<std::vector<Poly>> grid(
      fam.rows(), std::vector<Poly>(fam.cols(), Poly(fam.params())));
  for (int r = 0; r < fam.rows(); ++r)
    for (int c = 0; c < fam.cols(); ++c) grid[r][c] = fam.entry_poly(r, c);
  return bareiss_rank(
      grid, [](const Poly& p) { return p.is_zero(); },
      [](const Poly& a, const Poly& b) { return a.exact_div(b); });
}

}  // namespace

GenericRankResult generic_rank(const LinearMatrixFamily& fam,
                               const GenericRankConfig& cfg) {
  cfg.check();
  GenericRankResult res;
  res.seed = cfg.seed;
  res.trials = cfg.trials;

  const bool symbolic =
      cfg.force_symbolic || fam.rows() * fam.cols() <= cfg.symbolic_threshold;

  ParamSampler sampler(cfg.seed, cfg.coeff_bound);
  if (symbolic) {
    res.mode = RankMode::symbolic;
    res.rank = symbolic_rank(fam);
    res.error_bound = 0;
    // A witness point still gets reported; almost every point works, so
    // this terminates immediately in practice.
    for (int attempt = 0; attempt < 256; ++attempt) {
      Vec pt = sampler.next_point(fam.params());
      if (rank(fam.instantiate(pt)) == res.rank) {
        res.witness = std::move(pt);
        return res;
      }
    }
    throw lie_error(errc::invalid_argument,
                    "could not hit the generic rank by sampling");
  }

  res.mode = RankMode::randomized;
  if (!fam.depends_on_parameters()) {
    // Constant family: a single evaluation is exact.
    res.witness = zero_vec(fam.params());
    res.rank = rank(fam.instantiate(res.witness));
    res.error_bound = 0;
    return res;
  }
  res.rank = -1;
  for (int t = 0; t < cfg.trials; ++t) {
    Vec pt = sampler.next_point(fam.params());
    const int r = rank(fam.instantiate(pt));
    if (r > res.rank) {
      res.rank = r;
      res.witness = std::move(pt);
    }
  }
  const int rmax = std::min(fam.rows(), fam.cols());
  if (res.rank == rmax) {
    // Cannot undershoot when the family is already at full rank.
    res.error_bound = 0;
  } else {
    // Schwartz–Zippel per trial on an rmax x rmax minor (degree <= rmax),
    // independent trials.
    const Rational per_trial =
        Rational(rmax) / Rational(2 * cfg.coeff_bound + 1);
    Rational bound = 1;
    for (int t = 0; t < cfg.trials; ++t) bound *= per_trial;
    res.error_bound = bound;
  }
  return res;
}

IndexReport algebra_index(const LieAlgebra& g, const GenericRankConfig& cfg) {
  const auto fam = LinearMatrixFamily::bform(g);
  const GenericRankResult r = generic_rank(fam, cfg);
  // dim - ind is the rank of an alternating form, hence even.
  if (r.rank % 2 != 0)
    throw lie_error(errc::invalid_argument,
                    "alternating form returned an odd rank");
  IndexReport rep;
  rep.value = g.dim() - r.rank;
  rep.witness = LinearForm(r.witness);
  rep.mode = r.mode;
  rep.error_bound = r.error_bound;
  rep.trials = r.trials;
  rep.seed = r.seed;
  if (form_centralizer(g, rep.witness).dim() != rep.value)
    throw lie_error(errc::invalid_argument,
                    "witness does not achieve the reported index");
  return rep;
}

IndexReport representation_index(const Representation& rho,
                                 const GenericRankConfig& cfg) {
  const auto fam = LinearMatrixFamily::coadjoint_action(rho);
  const GenericRankResult r = generic_rank(fam, cfg);
  IndexReport rep;
  rep.value = rho.module_dim - r.rank;
  rep.witness = LinearForm(r.witness);
  rep.mode = r.mode;
  rep.error_bound = r.error_bound;
  rep.trials = r.trials;
  rep.seed = r.seed;
  // The stabilizer and the orbit come from the same matrix; their
  // dimensions must tie out exactly at the witness.
  const int stab = stabilizer_at(rho, rep.witness).dim();
  if (stab != rho.algebra.dim() - r.rank)
    throw lie_error(errc::invalid_argument,
                    "stabilizer dimension inconsistent with reported rank");
  return rep;
}

Subspace form_centralizer(const LieAlgebra& g, const LinearForm& l) {
  const auto fam = LinearMatrixFamily::bform(g);
  return Subspace(g.dim(), kernel_basis(fam.instantiate(l.coeffs)));
}

Subspace stabilizer_at(const Representation& rho, const LinearForm& l0) {
  const auto fam = LinearMatrixFamily::coadjoint_action(rho);
  return Subspace(rho.algebra.dim(), kernel_basis(fam.instantiate(l0.coeffs)));
}

Subspace orthogonal_wrt_form(const LieAlgebra& g, const Subspace& a,
                             const LinearForm& l) {
  if (a.ambient_dim() != g.dim() || l.ambient_dim() != g.dim())
    throw lie_error(errc::dimension_mismatch, "orthogonal ambient");
  Mat rows(a.dim(), g.dim());
  for (int u = 0; u < a.dim(); ++u) {
    const Mat adu = g.ad(a.basis_vector(u));
    // l([e_j, a_u]) = -l(ad(a_u) e_j).
    for (int j = 0; j < g.dim(); ++j) {
      Rational s = 0;
      for (int k = 0; k < g.dim(); ++k)
        if (!is_zero(adu.at(k, j))) s -= l.coeffs[k] * adu.at(k, j);
      rows.at(u, j) = s;
    }
  }
  return Subspace(g.dim(), kernel_basis(rows));
}

int orbit_dim(const LieAlgebra& g, const LinearForm& l) {
  const auto fam = LinearMatrixFamily::bform(g);
  return rank(fam.instantiate(l.coeffs));
}

int orbit_dim_rep(const Representation& rho, const LinearForm& l0) {
  const auto fam = LinearMatrixFamily::coadjoint_action(rho);
  return rank(fam.instantiate(l0.coeffs));
}

bool is_regular(const LieAlgebra& g, const LinearForm& l,
                const GenericRankConfig& cfg) {
  return form_centralizer(g, l).dim() == algebra_index(g, cfg).value;
}

bool is_subordinate(const LieAlgebra& g, const Subspace& h,
                    const LinearForm& l) {
  if (!is_subalgebra(g, h))
    throw lie_error(errc::not_subalgebra, "subordinate test needs a subalgebra");
  for (int i = 0; i < h.dim(); ++i)
    for (int j = i + 1; j < h.dim(); ++j)
      if (!is_zero(l(g.bracket(h.basis_vector(i), h.basis_vector(j)))))
        return false;
  return true;
}

bool is_polarization(const LieAlgebra& g, const Subspace& h,
                     const LinearForm& l) {
  if (!is_subalgebra(g, h))
    throw lie_error(errc::not_subalgebra,
                    "polarization test needs a subalgebra");
  return orthogonal_wrt_form(g, h, l) == h;
}

}  // namespace lieindex
