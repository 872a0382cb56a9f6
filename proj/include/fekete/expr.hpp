#pragma once

#include "fekete/rational.hpp"

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace fekete {

/// Leaf constructors for the expression grammar
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' digits)?
///   atom  := digits | 'sqrt' '(' ['-'] digits ')' | identifier | '(' expr ')'
template <class V>
struct ExprLeaves {
  std::function<V(const Rational&)> number;
  std::function<V(long)> sqrt_of;         // may be empty: radicals rejected
  std::function<V(const std::string&)> identifier;  // may be empty: names rejected
};

namespace detail {

template <class V>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprLeaves<V>& leaves) : s_(text), leaves_(leaves) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = v / unary();
      else return v;
    }
  }

  V unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    V base = atom();
    if (!eat('^')) return base;
    skip();
    std::string digits = take_digits();
    if (digits.empty()) fail("exponent expected");
    unsigned long e = std::stoul(digits);
    V r = leaves_.number(Rational(1));
    for (unsigned long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return leaves_.number(Rational(Integer(take_digits())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "sqrt") {
        if (!leaves_.sqrt_of) fail("radicals not allowed here");
        if (!eat('(')) fail("'(' expected after sqrt");
        bool neg = eat('-');
        skip();
        std::string digits = take_digits();
        if (digits.empty()) fail("integer radicand expected");
        if (!eat(')')) fail("')' expected");
        long m = std::stol(digits);
        return leaves_.sqrt_of(neg ? -m : m);
      }
      if (!leaves_.identifier) fail("unknown name '" + name + "'");
      return leaves_.identifier(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ExprLeaves<V>& leaves_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class V>
V parse_expression(std::string_view text, const ExprLeaves<V>& leaves) {
  return detail::ExprParser<V>(text, leaves).parse();
}

}  // namespace fekete
