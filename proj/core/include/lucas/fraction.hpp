#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "lucas/poly.hpp"

namespace lucas {

/// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
template <class E>
struct Frac {
  E num;
  E den;
  friend bool operator==(const Frac&, const Frac&) = default;
};

/// Field of fractions of a Euclidean polynomial ring K[v], e.g. Frac(F_q[th]).
template <class PolyBase>
class FractionField {
 public:
  using Inner = typename PolyBase::Elem;
  using Elem = Frac<Inner>;

  explicit FractionField(PolyBase ring) : ring_(std::move(ring)) {}

  const PolyBase& ring() const { return ring_; }
  std::uint32_t characteristic() const { return ring_.characteristic(); }
  std::string tag() const { return ring_.base().tag() + "(" + ring_.var() + ")"; }
  friend bool operator==(const FractionField& a, const FractionField& b) { return a.ring_ == b.ring_; }

  Elem zero() const { return {ring_.zero(), ring_.one()}; }
  Elem one() const { return {ring_.one(), ring_.one()}; }
  Elem from_int(long long n) const { return {ring_.from_int(n), ring_.one()}; }
  Elem embed(const Inner& a) const { return {a, ring_.one()}; }

  Elem make(Inner num, Inner den) const {
    if (ring_.is_zero(den)) throw std::domain_error("zero denominator");
    if (ring_.is_zero(num)) return zero();
    Inner g = ring_.gcd(num, den);
    num = ring_.divmod(num, g).first;
    den = ring_.divmod(den, g).first;
    const auto lead_inv = ring_.base().div(ring_.base().one(), ring_.leading(den));
    return {ring_.scale(lead_inv, num), ring_.scale(lead_inv, den)};
  }

  bool is_zero(const Elem& a) const { return ring_.is_zero(a.num); }
  bool is_integral(const Elem& a) const { return a.den == ring_.one(); }

  Elem add(const Elem& a, const Elem& b) const {
    if (a.den == b.den) return make(ring_.add(a.num, b.num), a.den);
    return make(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
  }
  Elem neg(const Elem& a) const { return {ring_.neg(a.num), a.den}; }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return make(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero fraction");
    return make(a.den, a.num);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::optional<Elem> symbol(std::string_view name) const {
    if (auto a = ring_.symbol(name)) return embed(*a);
    return std::nullopt;
  }

  std::string format(const Elem& a, bool nested = false) const {
    if (is_integral(a)) return ring_.format(a.num, nested);
    auto atom = [&](const Inner& x) {
      std::string s = ring_.format(x, true);
      return detail::is_composite_text(s) ? "(" + s + ")" : s;
    };
    return atom(a.num) + "/" + atom(a.den);
  }

 private:
  PolyBase ring_;
};

}  // namespace lucas
