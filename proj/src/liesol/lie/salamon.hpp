#ifndef LIESOL_LIE_SALAMON_HPP
#define LIESOL_LIE_SALAMON_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liesol/lie/algebra.hpp"

namespace liesol {

// One term of a parsed entry: entry k contains coef * e^{i,j}, meaning
// [e_i, e_j] has e_k-coefficient coef. The coefficient is kept as text so
// the caller can interpret it in its own field.
struct ParsedTerm {
  int i = 0, j = 0, k = 0;
  std::string coef;
  std::size_t pos = 0;
};

struct ParsedBrackets {
  int dim = 0;
  std::vector<ParsedTerm> terms;
};

// Grammar (ASCII):
//   input := '(' entry (',' entry)* ')'
//   entry := '0' | ['+'|'-'] term (('+'|'-') term)*
//   term  := [coef '*'] atom
//   coef  := integer ['/' integer] | '(' scalar ')'
//   atom  := 'e' '^' '{' int ',' int '}' | 'e' '^' '{' digit digit '}'
//          | digit digit
// The braced comma form is required when any index has two or more digits.
ParsedBrackets parse_salamon_text(std::string_view text);

template <class K>
LieAlgebra<K> parse_salamon(std::string_view text, bool check_jacobi = true) {
  ParsedBrackets p = parse_salamon_text(text);
  std::vector<BracketTerm<K>> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    K c;
    try {
      c = FieldTraits<K>::parse(t.coef);
    } catch (const Error&) {
      throw ParseError("invalid coefficient '" + t.coef + "'", t.pos);
    }
    terms.push_back({t.i, t.j, t.k, std::move(c)});
  }
  try {
    return check_jacobi ? LieAlgebra<K>::create(p.dim, std::move(terms))
                        : LieAlgebra<K>::create_unchecked(p.dim, std::move(terms));
  } catch (const InvalidError& e) {
    throw ParseError(e.what(), 0);
  }
}

// Canonical printer: always the fully braced comma form, e.g. "(0,0,e^{1,2})".
template <class K>
std::string render_salamon(const LieAlgebra<K>& alg) {
  int n = alg.dim();
  std::vector<std::string> entries(n);
  for (const auto& t : alg.terms()) {
    std::string& s = entries[t.k - 1];
    std::string coef = scalar_str(t.c);
    std::string atom = "e^{" + std::to_string(t.i) + "," + std::to_string(t.j) + "}";
    if (coef == "1") {
      if (!s.empty()) s += "+";
      s += atom;
    } else if (coef == "-1") {
      s += "-" + atom;
    } else if (coef.find('+') != std::string::npos || coef.find('-', 1) != std::string::npos) {
      if (!s.empty()) s += "+";
      s += "(" + coef + ")*" + atom;
    } else {
      if (!s.empty() && coef[0] != '-') s += "+";
      s += coef + "*" + atom;
    }
  }
  std::string out = "(";
  for (int k = 0; k < n; ++k) {
    if (k) out += ",";
    out += entries[k].empty() ? "0" : entries[k];
  }
  out += ")";
  return out;
}

}  // namespace liesol

#endif
