#include "lieindex/json_io.hpp"

namespace lieindex {

ojson algebra_to_json(const LieAlgebra& g) {
  ojson j;
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  ojson brackets = ojson::array();
  for (const auto& [ij, terms] : g.brackets()) {
    ojson entry = ojson::array();
    entry.push_back(ij.first);
    entry.push_back(ij.second);
    ojson coeffs = ojson::array();
    for (const auto& [k, c] : terms)
      coeffs.push_back(ojson::array({k, rational_to_string(c)}));
    entry.push_back(coeffs);
    brackets.push_back(entry);
  }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const ojson& j) {
  auto fail = [](const std::string& msg) -> lie_error {
    return lie_error(errc::parse_error, "algebra schema: " + msg);
  };
  if (!j.is_object()) throw fail("top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw fail("missing integer field 'dim'");
  const int dim = j["dim"].get<int>();
  if (dim < 0) throw fail("'dim' must be nonnegative");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw fail("'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw fail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != dim)
      throw fail("label count must equal 'dim'");
  }

  LieAlgebra::BracketMap brackets;
  if (!j.contains("brackets") || !j["brackets"].is_array())
    throw fail("missing array field 'brackets'");
  for (const auto& entry : j["brackets"]) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_array())
      throw fail("bracket entries must be [i, j, [[k, \"p/q\"], ...]]");
    const int i = entry[0].get<int>();
    const int jj = entry[1].get<int>();
    if (i < 0 || jj < 0 || i >= dim || jj >= dim || i >= jj)
      throw fail("bracket indices must satisfy 0 <= i < j < dim");
    LieAlgebra::SparseVec sv;
    for (const auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2 ||
          !term[0].is_number_integer() || !term[1].is_string())
        throw fail("coefficient terms must be [k, \"p/q\"]");
      const int k = term[0].get<int>();
      if (k < 0 || k >= dim) throw fail("coefficient index out of range");
      Rational c;
      try {
        c = rational_from_string(term[1].get<std::string>());
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
      sv.emplace_back(k, c);
    }
    if (brackets.count({i, jj})) throw fail("duplicate bracket pair");
    brackets[{i, jj}] = std::move(sv);
  }
  return LieAlgebra::make(dim, std::move(labels), std::move(brackets));
}

std::string algebra_to_text(const LieAlgebra& g) {
  return algebra_to_json(g).dump(2) + "\n";
}

LieAlgebra algebra_from_text(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded())
    throw lie_error(errc::parse_error, "invalid JSON input");
  return algebra_from_json(j);
}

ojson index_report_to_json(const IndexReport& r) {
  ojson j;
  j["value"] = r.value;
  j["mode"] = r.mode == RankMode::symbolic ? "symbolic" : "randomized";
  j["error_bound"] = rational_to_string(r.error_bound);
  ojson witness = ojson::array();
  for (const auto& c : r.witness.coeffs)
    witness.push_back(rational_to_string(c));
  j["witness"] = witness;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

}  // namespace lieindex
