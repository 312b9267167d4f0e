#include "fano3/polynomial.hpp"

#include <cctype>

#include "fano3/errors.hpp"

namespace fano3 {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial<Rational> run() {
    skip_ws();
    Polynomial<Rational> p = expr();
    skip_ws();
    if (!eof()) fail("trailing input");
    return p;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line_, col_, msg); }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  BigInt integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    BigInt v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (advance() - '0');
    return v;
  }

  Polynomial<Rational> expr() {
    Polynomial<Rational> acc = term();
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      const char op = advance();
      skip_ws();
      Polynomial<Rational> t = term();
      acc = (op == '+') ? acc + t : acc - t;
      skip_ws();
    }
    return acc;
  }

  Polynomial<Rational> term() {
    Polynomial<Rational> acc = factor();
    skip_ws();
    while (peek() == '*') {
      advance();
      skip_ws();
      acc = acc * factor();
      skip_ws();
    }
    return acc;
  }

  Polynomial<Rational> factor() {
    skip_ws();
    if (accept('(')) {
      Polynomial<Rational> p = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (peek() == 'x') {
      advance();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a variable index after 'x'");
      const char idx = advance();
      if (idx < '0' || idx > '4') fail("variables are x0..x4");
      int power = 1;
      skip_ws();
      if (accept('^')) {
        skip_ws();
        BigInt p = integer();
        if (p < 0 || p > 64) fail("exponent out of range");
        power = static_cast<int>(p);
      }
      if (power == 0) return Polynomial<Rational>::constant(Rational(1));
      return Polynomial<Rational>::variable(idx - '0', power);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = integer();
      if (accept('/')) {
        const std::size_t dline = line_, dcol = col_;
        BigInt den = integer();
        if (den == 0) throw parse_error(dline, dcol, "zero denominator");
        return Polynomial<Rational>::constant(Rational(num, den));
      }
      return Polynomial<Rational>::constant(Rational(num));
    }
    fail("expected a coefficient, variable or '('");
  }
};

}  // namespace

Polynomial<Rational> parse_polynomial(std::string_view text) { return Parser(text).run(); }

Polynomial<Rational> parse_quartic(std::string_view text) {
  Polynomial<Rational> p = Parser(text).run();
  if (!p.is_homogeneous_of_degree(4))
    throw parse_error(1, 1, "input must be a nonzero homogeneous polynomial of degree 4");
  return p;
}

}  // namespace fano3
