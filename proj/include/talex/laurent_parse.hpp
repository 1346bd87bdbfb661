#pragma once

// Recursive-descent parser for univariate Laurent polynomials over Q written
// in conventional notation, e.g. "7*t^2 - 13*t + 7" or "(t^2-t+1)^3".
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*')? factor)*
//   factor := ('-'|'+') factor | atom ('^' integer)?
//   atom   := integer ('/' integer)? | var | '(' expr ')'

#include <cctype>
#include <string>

#include "talex/errors.hpp"
#include "talex/laurent.hpp"

namespace talex {

namespace detail {

class LaurentParser {
 public:
  LaurentParser(std::string text, std::string var) : s_(std::move(text)), var_(std::move(var)) {}

  QLaurent parse() {
    QLaurent p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  QLaurent expr() {
    QLaurent acc = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QLaurent term() {
    QLaurent acc = factor();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || starts_var()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  QLaurent factor() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    QLaurent base = atom();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      long n = integer();
      if (negative) {
        if (base.size() != 1) fail("negative power of a non-monomial");
        auto [e, c] = *base.terms().begin();
        return QLaurent::monomial(Rational(1) / c, -e).pow(static_cast<unsigned>(n));
      }
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  QLaurent atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      QLaurent inner = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      return QLaurent(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (starts_var()) {
      pos_ += var_.size();
      return QLaurent::t();
    }
    fail("expected a number, variable or '('");
    return {};
  }

  long integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    return std::stol(s_.substr(start, pos_ - start));
  }

  bool starts_var() const { return s_.compare(pos_, var_.size(), var_) == 0; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad_polynomial", what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string s_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline QLaurent parse_laurent(const std::string& text, const std::string& var = "t") {
  return detail::LaurentParser(text, var).parse();
}

}  // namespace talex
