#include <cctype>

#include "liesol/lie/textcursor.hpp"
#include "liesol/metric/metric.hpp"

namespace liesol {

namespace {

using detail::Cursor;

// ei.ej with multi-digit indices, e.g. e10.e11.
std::pair<int, int> parse_pair_atom(Cursor& cur) {
  cur.expect('e');
  int i = std::stoi(cur.take_digits());
  cur.expect('.');
  cur.expect('e');
  int j = std::stoi(cur.take_digits());
  return {i, j};
}

}  // namespace

std::vector<MetricTermText> parse_metric_text(std::string_view text) {
  std::vector<MetricTermText> out;
  Cursor cur(text);
  if (cur.eof()) return out;
  if (cur.peek() == '0') {
    cur.take();
    if (!cur.eof()) throw ParseError("unexpected text after '0'", cur.pos());
    return out;
  }
  bool first = true;
  while (!cur.eof()) {
    std::string sign = "+";
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = std::string(1, cur.take());
    } else if (!first) {
      throw ParseError("expected '+' or '-'", cur.pos());
    }
    first = false;
    std::size_t at = cur.pos();
    std::string coef = "1";
    c = cur.peek();
    if (c == '(') {
      cur.take();
      coef = cur.take_until_matching_paren();
      cur.expect('*');
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = cur.take_digits();
      if (cur.peek() == '/') {
        cur.take();
        coef = digits + "/" + cur.take_digits();
      } else {
        coef = digits;
      }
      cur.expect('*');
    }
    auto [i, j] = parse_pair_atom(cur);
    if (sign == "-") coef = (coef[0] == '-') ? coef.substr(1) : "-" + coef;
    out.push_back({i, j, coef, at});
  }
  return out;
}

}  // namespace liesol
