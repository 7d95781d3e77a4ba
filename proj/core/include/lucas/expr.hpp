#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/ring.hpp"

namespace lucas {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Ring-independent syntax tree for the polynomial text grammar.
struct Expr {
  enum class Kind { Integer, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Integer;
  std::uint64_t value = 0;  // literal, or exponent for Pow
  std::string name;
  std::vector<Expr> args;
};

/// Grammar: sums and differences of products and quotients of powers;
/// atoms are integers, identifiers, and parenthesized expressions.
Expr parse_expression(std::string_view text);

template <CommutativeRing R>
typename R::Elem evaluate(const R& ring, const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Integer:
      return ring.from_int(static_cast<long long>(e.value % ring.characteristic()));
    case K::Symbol:
      if (auto s = ring.symbol(e.name)) return *s;
      throw ParseError("unknown symbol '" + e.name + "' for ring " + ring.tag(), 0);
    case K::Add:
      return ring.add(evaluate(ring, e.args[0]), evaluate(ring, e.args[1]));
    case K::Sub:
      return ring.sub(evaluate(ring, e.args[0]), evaluate(ring, e.args[1]));
    case K::Mul:
      return ring.mul(evaluate(ring, e.args[0]), evaluate(ring, e.args[1]));
    case K::Neg:
      return ring.neg(evaluate(ring, e.args[0]));
    case K::Pow:
      return power(ring, evaluate(ring, e.args[0]), e.value);
    case K::Div:
      if constexpr (HasDivision<R>) {
        return ring.div(evaluate(ring, e.args[0]), evaluate(ring, e.args[1]));
      } else {
        throw ParseError("division is not available in ring " + ring.tag(), 0);
      }
  }
  throw ParseError("malformed expression", 0);
}

template <CommutativeRing R>
typename R::Elem parse_elem(const R& ring, std::string_view text) {
  return evaluate(ring, parse_expression(text));
}

}  // namespace lucas
