#ifndef LIEINDEX_JSON_IO_HPP
#define LIEINDEX_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "lieindex/index.hpp"
#include "lieindex/liealg.hpp"

namespace lieindex {

using ojson = nlohmann::ordered_json;

/// {"dim": n, "labels": [...], "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
/// with 0-based indices, i < j, rationals as "p/q" strings. Serialization is
/// canonical: load followed by save reproduces a canonical file byte for
/// byte.
ojson algebra_to_json(const LieAlgebra& g);

/// Throws lie_error(parse_error) on schema violations and
/// lie_error(jacobi_violation) when the constants fail validation.
LieAlgebra algebra_from_json(const ojson& j);

std::string algebra_to_text(const LieAlgebra& g);
LieAlgebra algebra_from_text(const std::string& text);

ojson index_report_to_json(const IndexReport& r);

}  // namespace lieindex

#endif
