#include "lieindex/specparse.hpp"

#include <cctype>

namespace lieindex {

namespace {

struct Parser {
  std::string text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw lie_error(errc::parse_error, "spec parse error at offset " +
                                           std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (text[start] == '-' && pos == start + 1))
      fail("expected an integer");
    return std::stoi(text.substr(start, pos - start));
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  BuiltAlgebra parse_expr();
  Representation parse_rep();
};

std::map<std::string, Subspace> matrix_marks(const MatrixAlgebra& a,
                                             bool with_nminus) {
  std::map<std::string, Subspace> m;
  m["borel"] = triangular_part(a, TriangularPart::upper);
  m["nilrad"] = triangular_part(a, TriangularPart::strict_upper);
  m["cartan"] = triangular_part(a, TriangularPart::diagonal);
  m["so"] = antisymmetric_part(a);
  if (with_nminus)
    m["nminus"] = triangular_part(a, TriangularPart::strict_lower);
  return m;
}

Representation Parser::parse_rep() {
  const std::string name = ident();
  if (name == "sl2irr") {
    expect('(');
    const int m = integer();
    expect(')');
    return irreducible_sl2(m);
  }
  if (name == "adjoint") {
    expect('(');
    const BuiltAlgebra inner = parse_expr();
    expect(')');
    return adjoint_rep(inner.algebra);
  }
  fail("unknown representation selector '" + name + "'");
}

BuiltAlgebra Parser::parse_expr() {
  const std::string name = ident();
  if (name == "mautner") {
    const MautnerAlgebra m = mautner();
    return BuiltAlgebra{m.algebra,
                        {{"heis", m.heisenberg_ideal}, {"x", m.line_x}}};
  }
  expect('(');
  if (name == "gl" || name == "sl" || name == "so" || name == "sp") {
    const int n = integer();
    expect(')');
    const MatrixAlgebra a = classical(name, n);
    std::map<std::string, Subspace> marks;
    if (name == "gl" || name == "sl") marks = matrix_marks(a, name == "sl");
    return BuiltAlgebra{a.algebra, std::move(marks)};
  }
  if (name == "heisenberg") {
    const int k = integer();
    expect(')');
    LieAlgebra h = heisenberg(k);
    Subspace c = center(h);
    return BuiltAlgebra{std::move(h), {{"center", std::move(c)}}};
  }
  if (name == "borel") {
    const int n = integer();
    expect(')');
    const MatrixAlgebra b = borel_gl(n);
    return BuiltAlgebra{
        b.algebra,
        {{"nilrad", triangular_part(b, TriangularPart::strict_upper)},
         {"cartan", triangular_part(b, TriangularPart::diagonal)}}};
  }
  if (name == "nilrad") {
    const int n = integer();
    expect(')');
    const MatrixAlgebra u = strict_upper(n);
    LieAlgebra alg = u.algebra;
    Subspace c = center(alg);
    return BuiltAlgebra{std::move(alg), {{"center", std::move(c)}}};
  }
  if (name == "takiff") {
    const BuiltAlgebra inner = parse_expr();
    expect(',');
    const int k = integer();
    expect(')');
    LieAlgebra t = generalized_takiff(inner.algebra, k);
    const int d = inner.algebra.dim();
    std::map<std::string, Subspace> marks;
    std::vector<Vec> base, ideal;
    for (int i = 0; i < t.dim(); ++i) {
      Vec v = zero_vec(t.dim());
      v[i] = 1;
      (i < d ? base : ideal).push_back(std::move(v));
    }
    marks["base"] = Subspace::span_of(t.dim(), base);
    marks["ideal"] = Subspace::span_of(t.dim(), ideal);
    return BuiltAlgebra{std::move(t), std::move(marks)};
  }
  if (name == "iw") {
    const BuiltAlgebra inner = parse_expr();
    expect(',');
    const std::string selector = ident();
    expect(')');
    const auto it = inner.marked.find(selector);
    if (it == inner.marked.end())
      fail("unknown subalgebra selector '" + selector + "'");
    const SemidirectProduct sp = inonu_wigner(inner.algebra, it->second);
    return BuiltAlgebra{sp.algebra,
                        {{"module", sp.module_ideal}, {"sub", sp.acting_part}}};
  }
  if (name == "semidirect") {
    const Representation rho = parse_rep();
    expect(')');
    const SemidirectProduct sp = semidirect_abelian(rho);
    return BuiltAlgebra{sp.algebra,
                        {{"v", sp.module_ideal}, {"q", sp.acting_part}}};
  }
  fail("unknown construction '" + name + "'");
}

}  // namespace

BuiltAlgebra build_spec(const std::string& spec) {
  Parser p{spec};
  BuiltAlgebra out = p.parse_expr();
  if (!p.at_end()) p.fail("trailing input");
  return out;
}

}  // namespace lieindex
