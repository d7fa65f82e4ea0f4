#include <cctype>
#include <cstdlib>

#include "ueaspin/cli.hpp"

namespace ueaspin::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : UsageError("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

using uea::Element;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element parse() {
    Element e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

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

  Element expression() {
    Element acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = unary();
    while (accept('*')) acc = uea::multiply(acc, unary());
    return acc;
  }

  Element unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Element power() {
    Element base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::string digits = take_digits();
    if (digits.empty()) fail("expected an exponent");
    if (digits.size() > 3) fail("exponent too large");
    return uea::power(base, static_cast<unsigned>(std::stoul(digits)));
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Element primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'J') {
      if (pos_ + 1 >= text_.size()) fail("expected Jx, Jy or Jz");
      const char axis = text_[pos_ + 1];
      if (axis != 'x' && axis != 'y' && axis != 'z') fail("expected Jx, Jy or Jz");
      pos_ += 2;
      return Element::generator(uea::axis_from_char(axis));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = take_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        const std::string den = take_digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_pos);
        literal += "/" + den;
      }
      return Element::scalar(Rational::parse(literal));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

uea::Element parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace ueaspin::cli
