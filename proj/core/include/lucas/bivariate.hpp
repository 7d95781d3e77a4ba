#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lucas/digits.hpp"
#include "lucas/poly.hpp"

namespace lucas {

/// A monomial x^i y^j, identified by (deg_x, deg_y).
struct Monomial2 {
  std::size_t x = 0;
  std::size_t y = 0;
  friend bool operator==(const Monomial2&, const Monomial2&) = default;
  std::string to_string() const {
    if (x == 0 && y == 0) return "1";
    std::string s = detail::monomial_text("x", x);
    if (y > 0) s += (s.empty() ? "" : "*") + detail::monomial_text("y", y);
    return s;
  }
};

/// R[x][y] with y outermost; coefficient(i, j) is the coefficient of x^i y^j.
template <CommutativeRing R>
class Bivariate {
 public:
  using XRing = PolyRing<R>;
  using Ring = PolyRing<XRing>;
  using Elem = typename Ring::Elem;
  using Univariate = typename XRing::Elem;

  explicit Bivariate(const XRing& x_ring) : ring_(x_ring, "y") {}

  const Ring& ring() const { return ring_; }
  const XRing& x_ring() const { return ring_.base(); }

  Elem embed_x(const Univariate& f) const { return ring_.constant(f); }
  Elem embed_y(const Univariate& f) const {
    std::vector<Univariate> c;
    c.reserve(f.coeffs.size());
    for (const auto& a : f.coeffs) c.push_back(x_ring().constant(a));
    return ring_.from_coeffs(std::move(c));
  }

  typename R::Elem coefficient(const Elem& f, std::size_t i, std::size_t j) const {
    return x_ring().coeff(ring_.coeff(f, j), i);
  }

  bool is_symmetric(const Elem& f) const {
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
      for (std::size_t i = 0; i < f.coeffs[j].coeffs.size(); ++i)
        if (!(coefficient(f, i, j) == coefficient(f, j, i))) return false;
    return true;
  }

  /// Largest x-degree, then largest y-degree, among the nonzero terms.
  std::optional<Monomial2> leading_monomial(const Elem& f) const {
    std::optional<Monomial2> best;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
      const auto& row = f.coeffs[j].coeffs;
      if (row.empty()) continue;
      Monomial2 m{row.size() - 1, j};
      if (!best || m.x > best->x || (m.x == best->x && m.y > best->y)) best = m;
    }
    return best;
  }

  /// f(x + y), expanded with Lucas binomials.
  Elem substitute_sum(const Univariate& f) const {
    const R& base = x_ring().base();
    const std::uint32_t p = base.characteristic();
    const std::size_t len = f.coeffs.size();
    std::vector<std::vector<typename R::Elem>> grid(len, std::vector<typename R::Elem>(len, base.zero()));
    for (std::size_t n = 0; n < len; ++n) {
      const auto& c = f.coeffs[n];
      if (base.is_zero(c)) continue;
      for (std::size_t k = 0; k <= n; ++k) {
        const std::uint32_t b = binom_mod_p(n, k, p);
        if (b == 0) continue;
        auto& slot = grid[n - k][k];
        slot = base.add(slot, base.mul(base.from_int(b), c));
      }
    }
    std::vector<Univariate> rows;
    rows.reserve(len);
    for (auto& row : grid) rows.push_back(x_ring().from_coeffs(std::move(row)));
    return ring_.from_coeffs(std::move(rows));
  }

  /// Evaluates at y = 0.
  Univariate at_y_zero(const Elem& f) const { return ring_.coeff(f, 0); }

 private:
  Ring ring_;
};

/// True iff every monomial exponent of f is a power of q (q^0 = 1 included).
template <CommutativeRing R>
bool is_q_linear(const PolyRing<R>& ring, const typename PolyRing<R>::Elem& f, std::uint64_t q) {
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (ring.base().is_zero(f.coeffs[k])) continue;
    if (!is_power_of(k, q)) return false;
  }
  return true;
}

}  // namespace lucas
