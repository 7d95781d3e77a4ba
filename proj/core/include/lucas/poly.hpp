#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lucas/ring.hpp"

namespace lucas {

/// Dense univariate polynomial, low degree first, trailing zeros trimmed.
/// The zero polynomial has no coefficients and no degree.
template <class E>
struct Poly {
  std::vector<E> coeffs;
  friend bool operator==(const Poly&, const Poly&) = default;
};

/// Polynomial ring Base[var]. Itself a CommutativeRing, so rings nest:
/// PolyRing<PolyRing<FiniteField>> is F_q[th][x] or F_q[x][y].
template <CommutativeRing Base>
class PolyRing {
 public:
  using Coeff = typename Base::Elem;
  using Elem = Poly<Coeff>;

  PolyRing(Base base, std::string var) : base_(std::move(base)), var_(std::move(var)) {}

  const Base& base() const { return base_; }
  const std::string& var() const { return var_; }
  std::uint32_t characteristic() const { return base_.characteristic(); }
  std::string tag() const { return base_.tag() + "[" + var_ + "]"; }
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.var_ == b.var_ && a.base_ == b.base_;
  }

  Elem zero() const { return {}; }
  Elem one() const { return constant(base_.one()); }
  Elem from_int(long long n) const { return constant(base_.from_int(n)); }
  Elem constant(const Coeff& c) const {
    if (base_.is_zero(c)) return {};
    return Elem{{c}};
  }
  Elem monomial(const Coeff& c, std::size_t e) const {
    if (base_.is_zero(c)) return {};
    Elem f;
    f.coeffs.assign(e + 1, base_.zero());
    f.coeffs[e] = c;
    return f;
  }
  Elem variable() const { return monomial(base_.one(), 1); }
  Elem from_coeffs(std::vector<Coeff> c) const {
    Elem f{std::move(c)};
    trim(f);
    return f;
  }

  bool is_zero(const Elem& f) const { return f.coeffs.empty(); }
  std::optional<std::size_t> degree(const Elem& f) const {
    if (f.coeffs.empty()) return std::nullopt;
    return f.coeffs.size() - 1;
  }
  Coeff coeff(const Elem& f, std::size_t k) const {
    return k < f.coeffs.size() ? f.coeffs[k] : base_.zero();
  }
  Coeff leading(const Elem& f) const {
    if (f.coeffs.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return f.coeffs.back();
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a.coeffs.size() >= b.coeffs.size() ? a : b;
    const Elem& s = a.coeffs.size() >= b.coeffs.size() ? b : a;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) r.coeffs[k] = base_.add(r.coeffs[k], s.coeffs[k]);
    trim(r);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r.coeffs) c = base_.neg(c);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem scale(const Coeff& c, const Elem& f) const {
    if (base_.is_zero(c)) return {};
    Elem r = f;
    for (auto& x : r.coeffs) x = base_.mul(c, x);
    trim(r);
    return r;
  }
  /// f * var^k
  Elem shift(const Elem& f, std::size_t k) const {
    if (f.coeffs.empty()) return {};
    Elem r;
    r.coeffs.assign(k, base_.zero());
    r.coeffs.insert(r.coeffs.end(), f.coeffs.begin(), f.coeffs.end());
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<Coeff> r(a.coeffs.size() + b.coeffs.size() - 1, base_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (base_.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
        if (base_.is_zero(b.coeffs[j])) continue;
        r[i + j] = base_.add(r[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
      }
    }
    return from_coeffs(std::move(r));
  }

  Coeff evaluate(const Elem& f, const Coeff& at) const {
    Coeff acc = base_.zero();
    for (std::size_t k = f.coeffs.size(); k-- > 0;) acc = base_.add(base_.mul(acc, at), f.coeffs[k]);
    return acc;
  }
  /// f(g) for g in this ring.
  Elem compose(const Elem& f, const Elem& g) const {
    Elem acc;
    for (std::size_t k = f.coeffs.size(); k-- > 0;) acc = add(mul(acc, g), constant(f.coeffs[k]));
    return acc;
  }

  // Euclidean operations; require a field base.
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const
    requires HasDivision<Base>
  {
    if (b.coeffs.empty()) throw std::domain_error("polynomial division by zero");
    Elem rem = a, quo;
    const std::size_t db = b.coeffs.size() - 1;
    if (rem.coeffs.size() > db) quo.coeffs.assign(rem.coeffs.size() - db, base_.zero());
    const Coeff lead = b.coeffs.back();
    while (rem.coeffs.size() > db) {
      const std::size_t shift_by = rem.coeffs.size() - 1 - db;
      const Coeff factor = base_.div(rem.coeffs.back(), lead);
      quo.coeffs[shift_by] = factor;
      for (std::size_t k = 0; k <= db; ++k)
        rem.coeffs[shift_by + k] = base_.sub(rem.coeffs[shift_by + k], base_.mul(factor, b.coeffs[k]));
      trim(rem);
    }
    trim(quo);
    return {std::move(quo), std::move(rem)};
  }
  Elem make_monic(const Elem& f) const
    requires HasDivision<Base>
  {
    if (f.coeffs.empty()) return f;
    return scale(base_.div(base_.one(), f.coeffs.back()), f);
  }
  /// Monic gcd; gcd(0, 0) = 0.
  Elem gcd(Elem a, Elem b) const
    requires HasDivision<Base>
  {
    while (!b.coeffs.empty()) {
      Elem r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return make_monic(a);
  }

  std::optional<Elem> symbol(std::string_view name) const {
    if (name == var_) return variable();
    if constexpr (requires { base_.symbol(name); }) {
      if (auto c = base_.symbol(name)) return constant(*c);
    }
    return std::nullopt;
  }

  /// Canonical text: decreasing exponent, composite coefficients in
  /// parentheses, " + " at top level and "+" when nested.
  std::string format(const Elem& f, bool nested = false) const {
    if (f.coeffs.empty()) return "0";
    if (f.coeffs.size() == 1) return base_.format(f.coeffs[0], nested);
    std::string out;
    const char* sep = nested ? "+" : " + ";
    for (std::size_t k = f.coeffs.size(); k-- > 0;) {
      const Coeff& c = f.coeffs[k];
      if (base_.is_zero(c)) continue;
      if (!out.empty()) out += sep;
      std::string cs = base_.format(c, true);
      if (detail::is_composite_text(cs)) cs = "(" + cs + ")";
      if (k == 0)
        out += cs;
      else if (c == base_.one())
        out += detail::monomial_text(var_, k);
      else
        out += cs + "*" + detail::monomial_text(var_, k);
    }
    return out;
  }

  template <class Rng>
  Elem random(Rng& rng, std::size_t max_degree) const
    requires requires(const Base& b, Rng& g) { b.random(g); }
  {
    std::vector<Coeff> c(max_degree + 1);
    for (auto& x : c) x = base_.random(rng);
    return from_coeffs(std::move(c));
  }

 private:
  void trim(Elem& f) const {
    while (!f.coeffs.empty() && base_.is_zero(f.coeffs.back())) f.coeffs.pop_back();
  }

  Base base_;
  std::string var_;
};

}  // namespace lucas
