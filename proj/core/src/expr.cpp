#include "lucas/expr.hpp"

#include <cctype>
#include <limits>

namespace lucas {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
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

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e{kind, 0, {}, {}};
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      if (accept('+'))
        lhs = binary(Expr::Kind::Add, std::move(lhs), product());
      else if (accept('-'))
        lhs = binary(Expr::Kind::Sub, std::move(lhs), product());
      else
        return lhs;
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = binary(Expr::Kind::Mul, std::move(lhs), unary());
      else if (accept('/'))
        lhs = binary(Expr::Kind::Div, std::move(lhs), unary());
      else
        return lhs;
    }
  }

  Expr unary() {
    if (accept('-')) {
      Expr e{Expr::Kind::Neg, 0, {}, {}};
      e.args.push_back(unary());
      return e;
    }
    Expr base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a nonnegative integer", at);
      Expr e{Expr::Kind::Pow, integer(), {}, {}};
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) throw ParseError("integer literal too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr{Expr::Kind::Integer, integer(), {}, {}};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Expr{Expr::Kind::Symbol, 0, std::string(text_.substr(start, pos_ - start)), {}};
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace lucas
