#ifndef LIESOL_LIE_TEXTCURSOR_HPP
#define LIESOL_LIE_TEXTCURSOR_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "liesol/errors.hpp"

namespace liesol::detail {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    return s_[pos_++];
  }
  void expect(char c) {
    std::size_t at = pos_;
    if (take() != c) throw ParseError(std::string("expected '") + c + "'", at);
  }
  std::size_t pos() const { return pos_; }

  std::string take_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", start);
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string take_until_matching_paren() {
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < s_.size()) {
      if (s_[pos_] == '(') ++depth;
      if (s_[pos_] == ')' && --depth == 0) {
        std::string inner(s_.substr(start, pos_ - start));
        ++pos_;
        return inner;
      }
      ++pos_;
    }
    throw ParseError("unbalanced '('", start);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace liesol::detail

#endif
