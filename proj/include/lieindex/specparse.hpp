#ifndef LIEINDEX_SPECPARSE_HPP
#define LIEINDEX_SPECPARSE_HPP

#include <map>
#include <string>

#include "lieindex/constructions.hpp"

namespace lieindex {

/// An algebra built from a spec expression, together with its named
/// distinguished subspaces (the selectors iw(...) accepts).
struct BuiltAlgebra {
  LieAlgebra algebra;
  std::map<std::string, Subspace> marked;
};

/// Builds an algebra from the construction mini-language:
///
///   expr     := gl(n) | sl(n) | so(n) | sp(2n) | heisenberg(k) | mautner
///             | borel(n) | nilrad(n) | takiff(expr, k) | iw(expr, selector)
///             | semidirect(rep)
///   rep      := sl2irr(m) | adjoint(expr)
///   selector := a marked-subspace name of the inner expression
///
/// Marked names: gl/sl export borel, nilrad, cartan, so (and sl also
/// nminus); heisenberg exports center; mautner exports heis and x;
/// borel(n) exports nilrad and cartan; takiff exports base and ideal;
/// iw exports module and sub; semidirect exports v and q.
///
/// Throws lie_error(parse_error) for malformed expressions or unknown
/// selectors, and construction errors (invalid_argument etc.) for valid
/// expressions with bad parameters.
BuiltAlgebra build_spec(const std::string& spec);

}  // namespace lieindex

#endif
