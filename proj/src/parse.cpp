#include "reticular/parse.hpp"

#include <cctype>

namespace reticular {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarLayout& layout) : s_(text), layout_(layout) {}

  CornerPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    CornerPoly p = expr();
    skip();
    if (pos_ != s_.size()) {
      if (starts_factor()) throw ParseError("implicit multiplication is not allowed", pos_);
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  CornerPoly expr() {
    CornerPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  CornerPoly term() {
    CornerPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          throw ParseError("division is only allowed by a number", at);
        }
        Rational d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        acc *= Rational(1) / d;
      } else if (starts_factor()) {
        throw ParseError("implicit multiplication is not allowed", pos_);
      } else {
        return acc;
      }
    }
  }

  CornerPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    CornerPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", pos_);
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw ParseError("expected an integer exponent", pos_);
      }
      const std::size_t at = pos_;
      Rational e = integer();
      if (e > 1000) throw ParseError("exponent too large", at);
      return power(base, static_cast<int>(e.get_num().get_si()), -1);
    }
    return base;
  }

  Rational integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Rational(std::string(s_.substr(start, pos_ - start)));
  }

  CornerPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CornerPoly inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v = integer();
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        throw ParseError("implicit multiplication is not allowed", pos_);
      }
      return CornerPoly::constant(layout_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = s_.substr(start, pos_ - start);
      auto id = layout_.find(name);
      if (!id) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return CornerPoly::variable(layout_, *id);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const VarLayout& layout_;
  std::size_t pos_ = 0;
};

}  // namespace

CornerPoly parse_poly(std::string_view text, const VarLayout& layout) {
  return Parser(text, layout).run();
}

CornerPoly parse_poly(std::string_view text, int r, int k, std::vector<std::string> params) {
  return parse_poly(text, VarLayout(r, k, std::move(params)));
}

}  // namespace reticular
