#include "liesol/lie/salamon.hpp"

#include <cctype>

#include "liesol/errors.hpp"
#include "liesol/lie/textcursor.hpp"

namespace liesol {

namespace {

using detail::Cursor;

struct Atom {
  int i, j;
};

Atom parse_atom(Cursor& cur) {
  std::size_t at = cur.pos();
  char c = cur.peek();
  if (c == 'e') {
    cur.take();
    cur.expect('^');
    cur.expect('{');
    std::string first = cur.take_digits();
    int i, j;
    if (cur.peek() == ',') {
      cur.take();
      std::string second = cur.take_digits();
      i = std::stoi(first);
      j = std::stoi(second);
    } else {
      if (first.size() != 2)
        throw ParseError("e^{ij} without comma requires exactly two digits", at);
      i = first[0] - '0';
      j = first[1] - '0';
    }
    cur.expect('}');
    return {i, j};
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string digits = cur.take_digits();
    if (digits.size() != 2)
      throw ParseError("bare index pair must be exactly two digits; use e^{i,j} for indices >= 10",
                       at);
    return {digits[0] - '0', digits[1] - '0'};
  }
  throw ParseError("expected a term", at);
}

// Parses [coef '*'] atom, returns (coef text, atom). A number is a
// coefficient only if followed by '*' or '/'; otherwise it is a bare pair.
void parse_term(Cursor& cur, std::string sign, std::vector<ParsedTerm>& out, int entry_index) {
  std::size_t at = cur.pos();
  std::string coef = "1";
  char c = cur.peek();
  if (c == '(') {
    cur.take();
    coef = cur.take_until_matching_paren();
    cur.expect('*');
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    // Look ahead: digits optionally followed by /digits, then '*'.
    std::string digits = cur.take_digits();
    if (cur.peek() == '/') {
      cur.take();
      std::string den = cur.take_digits();
      cur.expect('*');
      coef = digits + "/" + den;
    } else if (cur.peek() == '*') {
      cur.take();
      coef = digits;
    } else {
      // Bare pair atom.
      if (digits.size() != 2)
        throw ParseError(
            "bare index pair must be exactly two digits; use e^{i,j} for indices >= 10", at);
      Atom a{digits[0] - '0', digits[1] - '0'};
      out.push_back({a.i, a.j, entry_index, sign == "-" ? "-1" : "1", at});
      return;
    }
  }
  Atom a = parse_atom(cur);
  if (sign == "-") coef = (coef[0] == '-') ? coef.substr(1) : "-" + coef;
  out.push_back({a.i, a.j, entry_index, coef, at});
}

void parse_entry(Cursor& cur, int entry_index, std::vector<ParsedTerm>& out) {
  // '0' | signed term list
  std::size_t before = out.size();
  if (cur.peek() == '0') {
    cur.take();
    char nxt = cur.peek();
    if (nxt == ',' || nxt == ')' || nxt == '\0') return;
    throw ParseError("unexpected text after '0' entry", cur.pos());
  }
  std::string sign = "+";
  if (cur.peek() == '+' || cur.peek() == '-') sign = std::string(1, cur.take());
  parse_term(cur, sign, out, entry_index);
  while (cur.peek() == '+' || cur.peek() == '-') {
    sign = std::string(1, cur.take());
    parse_term(cur, sign, out, entry_index);
  }
  if (out.size() == before) throw ParseError("empty entry", cur.pos());
}

}  // namespace

ParsedBrackets parse_salamon_text(std::string_view text) {
  Cursor cur(text);
  cur.expect('(');
  ParsedBrackets result;
  int entry_index = 0;
  for (;;) {
    ++entry_index;
    parse_entry(cur, entry_index, result.terms);
    char c = cur.take();
    if (c == ')') break;
    if (c != ',') throw ParseError("expected ',' or ')'", cur.pos() - 1);
  }
  if (!cur.eof()) throw ParseError("trailing text after ')'", cur.pos());
  result.dim = entry_index;
  for (const auto& t : result.terms) {
    if (t.i < 1 || t.i > result.dim || t.j < 1 || t.j > result.dim)
      throw ParseError("index out of range in e^{" + std::to_string(t.i) + "," +
                           std::to_string(t.j) + "} (dimension " + std::to_string(result.dim) +
                           ")",
                       t.pos);
    if (t.i == t.j)
      throw ParseError("repeated index in e^{" + std::to_string(t.i) + "," + std::to_string(t.j) +
                           "}",
                       t.pos);
  }
  return result;
}

}  // namespace liesol
