#pragma once

// Recursive-descent parser for polynomial expressions shared by the
// commutative and noncommutative polynomial types.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := number ['/' number] | identifier | '(' expr ')'
//
// Juxtaposition is rejected: "2x" and "x y" are errors.

#include <cctype>
#include <span>
#include <string>

#include "pointex/scalar.hpp"

namespace pointex::detail {

template <class Ring>
class ExprParser {
 public:
  using Value = typename Ring::Value;

  ExprParser(const std::string& text, std::span<const std::string> names, const Ring& ring)
      : text_(text), names_(names), ring_(ring) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("col " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    skip_space();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = term();
    if (negate) acc = ring_.negate(acc);
    for (;;) {
      if (accept('+')) {
        acc = ring_.add(acc, term());
      } else if (accept('-')) {
        acc = ring_.add(acc, ring_.negate(term()));
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    while (accept('*')) acc = ring_.mul(acc, factor());
    skip_space();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                                text_[pos_] == '_'))
      fail("missing '*' (juxtaposition is not allowed)");
    return acc;
  }

  Value factor() {
    Value base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > 64) fail("exponent too large");
      Value acc = ring_.one();
      for (unsigned long i = 0; i < e; ++i) acc = ring_.mul(acc, base);
      return acc;
    }
    return base;
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num = text_.substr(start, pos_ - start);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        num += "/" + text_.substr(dstart, pos_ - dstart);
      }
      Scalar s = Scalar::parse(num, ring_.field());
      return ring_.constant(s);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return ring_.variable(i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::span<const std::string> names_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace pointex::detail
