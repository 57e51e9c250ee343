#include "vinc/series_expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "vinc/catalan_series.hpp"

namespace vinc {

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  int order;
  ZSeries b, c;

  explicit Parser(std::string_view t, int n)
      : text(t), order(n), b(make_B(n)), c(make_C(n)) {}

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("series expression: " + what + " at offset " +
                                std::to_string(pos) + " in '" + std::string(text) + "'");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos < text.size() && text[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  unsigned parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (v > 1000000) fail("integer literal too large");
      ++pos;
    }
    return static_cast<unsigned>(v);
  }

  ZSeries parse_atom() {
    switch (peek()) {
      case 'B':
        ++pos;
        return b;
      case 'C':
        ++pos;
        return c;
      case 'z':
        ++pos;
        return ZSeries::monomial(1, Int(1), order);
      case '(': {
        ++pos;
        ZSeries s = parse_expr();
        if (!eat(')')) fail("expected ')'");
        return s;
      }
      default:
        if (std::isdigit(static_cast<unsigned char>(peek())))
          return ZSeries::monomial(0, Int(static_cast<long>(parse_uint())), order);
        fail("expected B, C, z, an integer, or '('");
    }
  }

  ZSeries parse_factor() {
    if (eat('-')) return -parse_factor();
    ZSeries s = parse_atom();
    if (eat('^')) return s.pow(parse_uint());
    return s;
  }

  ZSeries parse_term() {
    ZSeries s = parse_factor();
    while (eat('*')) s = s * parse_factor();
    return s;
  }

  ZSeries parse_expr() {
    ZSeries s = parse_term();
    for (;;) {
      if (eat('+'))
        s = s + parse_term();
      else if (eat('-'))
        s = s - parse_term();
      else
        return s;
    }
  }
};

}  // namespace

ZSeries parse_series_expr(std::string_view text, int order) {
  Parser p(text, order);
  ZSeries s = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return s;
}

}  // namespace vinc
