#include "liesol/exact/scalar.hpp"

#include <cctype>

namespace liesol {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_rational_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
  if (digits == 0) return false;
  if (pos == s.size()) return true;
  if (s[pos] != '/') return false;
  ++pos;
  digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++digits;
  return digits > 0 && pos == s.size();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (!valid_rational_text(s))
    throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  if (s.front() == '+') s.remove_prefix(1);  // mpq_set_str rejects a leading +
  Rational q(std::string(s), 10);
  if (sgn(q.get_den()) == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  q.canonicalize();
  return q;
}

Gaussian parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar", 0);
  // Split at the last top-level '+' or '-' that is not the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '*') split = p;
  }
  auto parse_part = [&](std::string_view part, bool* imaginary) -> Rational {
    part = trim(part);
    *imaginary = false;
    if (!part.empty() && part.back() == 'i') {
      *imaginary = true;
      part.remove_suffix(1);
      part = trim(part);
      if (!part.empty() && part.back() == '*') {
        part.remove_suffix(1);
        part = trim(part);
      }
      if (part.empty() || part == "+") return Rational(1);
      if (part == "-") return Rational(-1);
    }
    return parse_rational(part);
  };
  if (split == std::string_view::npos) {
    bool imag = false;
    Rational v = parse_part(s, &imag);
    return imag ? Gaussian(Rational(0), v) : Gaussian(v);
  }
  bool imag1 = false, imag2 = false;
  Rational a = parse_part(s.substr(0, split), &imag1);
  // Keep the sign with the second part.
  Rational b = parse_part(s.substr(split), &imag2);
  if (imag1 == imag2) throw ParseError("malformed scalar '" + std::string(text) + "'", split);
  if (imag1) return Gaussian(b, a);
  return Gaussian(a, b);
}

}  // namespace liesol
