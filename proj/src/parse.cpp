#include "fracchern/parse.hpp"

#include <cctype>
#include <string>

#include "fracchern/errors.hpp"

namespace fracchern {

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  GradedPolynomial parse() {
    auto p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " +
                     what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  GradedPolynomial expr() {
    auto p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  GradedPolynomial term() {
    auto p = unary();
    for (;;) {
      if (eat('*')) {
        p = mul(p, unary());
      } else if (eat('/')) {
        auto d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        p *= Rational(1) / d.constant_term();
      } else {
        return p;
      }
    }
  }

  GradedPolynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power_expr();
  }

  GradedPolynomial power_expr() {
    auto base = primary();
    if (eat('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) fail("exponent too large");
      return power(base, static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  GradedPolynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      auto p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer v(std::string(text_.substr(start, pos_ - start)));
      return GradedPolynomial::constant(ring_, Rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto i = ring_->index_of(name);
      if (!i) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      return GradedPolynomial::generator(ring_, *i);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
};

}  // namespace

GradedPolynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

}  // namespace fracchern
