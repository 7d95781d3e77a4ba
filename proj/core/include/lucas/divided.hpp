#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/digits.hpp"
#include "lucas/expr.hpp"
#include "lucas/poly.hpp"

namespace lucas {

/// Truncated element sum_{i < trunc} a_i D_i of the divided-power series
/// ring R{{D}}. Coefficients at indices >= trunc are unknown, not zero.
/// Only nonzero coefficients are stored.
template <class E>
struct DividedElem {
  std::size_t trunc = 1;
  std::map<std::size_t, E> coeffs;
};

/// Result of comparing two truncated elements on their common window.
struct WindowComparison {
  bool equal = true;
  std::size_t window = 0;
  std::optional<std::size_t> first_difference;
};

/// a == b iff they agree below min(a.trunc, b.trunc).
template <class E>
bool operator==(const DividedElem<E>& a, const DividedElem<E>& b) {
  const std::size_t window = std::min(a.trunc, b.trunc);
  auto ia = a.coeffs.begin(), ib = b.coeffs.begin();
  for (;;) {
    const bool ea = ia == a.coeffs.end() || ia->first >= window;
    const bool eb = ib == b.coeffs.end() || ib->first >= window;
    if (ea || eb) return ea && eb;
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    ++ia;
    ++ib;
  }
}

template <CommutativeRing R>
class DividedRing {
 public:
  using Coeff = typename R::Elem;
  using Elem = DividedElem<Coeff>;

  explicit DividedRing(R coefficients) : coeffs_(std::move(coefficients)) {}

  const R& coefficient_ring() const { return coeffs_; }
  std::uint32_t characteristic() const { return coeffs_.characteristic(); }

  Elem zero(std::size_t trunc) const { return make(trunc, {}); }
  Elem unit(std::size_t trunc) const { return symbol(0, trunc); }
  /// c * D_i (zero if i >= trunc).
  Elem symbol(std::size_t i, std::size_t trunc, std::optional<Coeff> c = std::nullopt) const {
    Elem f = zero(trunc);
    const Coeff value = c ? *c : coeffs_.one();
    if (i < trunc && !coeffs_.is_zero(value)) f.coeffs.emplace(i, value);
    return f;
  }
  Elem make(std::size_t trunc, std::map<std::size_t, Coeff> c) const {
    if (trunc == 0) throw std::invalid_argument("truncation order must be positive");
    Elem f{trunc, {}};
    for (auto& [i, a] : c)
      if (i < trunc && !coeffs_.is_zero(a)) f.coeffs.emplace(i, std::move(a));
    return f;
  }
  Elem from_dense(const std::vector<Coeff>& c) const {
    std::map<std::size_t, Coeff> m;
    for (std::size_t i = 0; i < c.size(); ++i) m.emplace(i, c[i]);
    return make(c.size(), std::move(m));
  }

  Coeff coeff(const Elem& f, std::size_t i) const {
    if (i >= f.trunc) throw std::out_of_range("index " + std::to_string(i) + " beyond truncation");
    auto it = f.coeffs.find(i);
    return it == f.coeffs.end() ? coeffs_.zero() : it->second;
  }
  std::optional<std::size_t> lowest_index(const Elem& f) const {
    if (f.coeffs.empty()) return std::nullopt;
    return f.coeffs.begin()->first;
  }
  bool has_unit_constant(const Elem& f) const { return coeff(f, 0) == coeffs_.one(); }

  Elem truncate(const Elem& f, std::size_t trunc) const {
    return make(std::min(trunc, f.trunc), f.coeffs);
  }

  Elem add(const Elem& a, const Elem& b) const {
    auto m = a.coeffs;
    for (const auto& [i, c] : b.coeffs) {
      auto [it, inserted] = m.emplace(i, c);
      if (!inserted) it->second = coeffs_.add(it->second, c);
    }
    return make(std::min(a.trunc, b.trunc), std::move(m));
  }
  Elem neg(const Elem& a) const {
    Elem r = a;
    for (auto& [i, c] : r.coeffs) c = coeffs_.neg(c);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem scale(const Coeff& s, const Elem& f) const {
    std::map<std::size_t, Coeff> m;
    for (const auto& [i, c] : f.coeffs) m.emplace(i, coeffs_.mul(s, c));
    return make(f.trunc, std::move(m));
  }

  /// D_i * D_j = C(i+j, j) D_{i+j}, extended bilinearly.
  Elem mul(const Elem& a, const Elem& b) const {
    const std::size_t trunc = std::min(a.trunc, b.trunc);
    const std::uint32_t p = characteristic();
    std::map<std::size_t, Coeff> m;
    for (const auto& [i, x] : a.coeffs) {
      if (i >= trunc) break;
      for (const auto& [j, y] : b.coeffs) {
        if (i + j >= trunc) break;
        const std::uint32_t binom = binom_mod_p(i + j, j, p);
        if (binom == 0) continue;
        Coeff term = coeffs_.mul(x, y);
        if (binom != 1) term = coeffs_.mul(coeffs_.from_int(binom), term);
        auto [it, inserted] = m.emplace(i + j, term);
        if (!inserted) it->second = coeffs_.add(it->second, term);
      }
    }
    return make(trunc, std::move(m));
  }

  /// Geometric series sum_k (-(f - 1))^k; requires constant term 1.
  Elem inverse(const Elem& f) const {
    if (!has_unit_constant(f)) throw std::invalid_argument("inverse requires constant coefficient 1");
    const Elem h = neg(sub(f, unit(f.trunc)));
    Elem result = unit(f.trunc), term = unit(f.trunc);
    for (std::size_t k = 1; k < f.trunc; ++k) {
      term = mul(term, h);
      if (term.coeffs.empty()) break;
      result = add(result, term);
    }
    return result;
  }

  Elem pow(const Elem& f, std::uint64_t e) const {
    Elem result = unit(f.trunc), base = f;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      if (e > 1) base = mul(base, base);
    }
    return result;
  }

  WindowComparison compare(const Elem& a, const Elem& b) const {
    WindowComparison cmp;
    cmp.window = std::min(a.trunc, b.trunc);
    for (std::size_t i = 0; i < cmp.window; ++i) {
      if (!(coeff(a, i) == coeff(b, i))) {
        cmp.equal = false;
        cmp.first_difference = i;
        return cmp;
      }
    }
    return cmp;
  }

  /// Text form: header "trunc=<N> ring=<tag>", then "<index>: <coefficient>"
  /// for each nonzero coefficient in increasing index order.
  std::string format(const Elem& f) const {
    std::string out = "trunc=" + std::to_string(f.trunc) + " ring=" + coeffs_.tag() + "\n";
    for (const auto& [i, c] : f.coeffs) out += std::to_string(i) + ": " + coeffs_.format(c, false) + "\n";
    return out;
  }

  Elem parse(std::string_view text) const {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty divided-power text", 0);
    const auto header = parse_header(line);
    if (header.second != coeffs_.tag())
      throw ParseError("ring tag '" + header.second + "' does not match " + coeffs_.tag(), 0);
    std::map<std::size_t, Coeff> m;
    std::size_t offset = line.size() + 1;
    while (std::getline(in, line)) {
      if (line.empty()) {
        offset += 1;
        continue;
      }
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("expected '<index>: <polynomial>'", offset);
      std::size_t index = 0;
      try {
        std::size_t used = 0;
        index = std::stoull(line.substr(0, colon), &used);
        if (used != colon) throw ParseError("bad index", offset);
      } catch (const std::logic_error&) {
        throw ParseError("bad index", offset);
      }
      if (index >= header.first) throw ParseError("index beyond truncation", offset);
      if (m.count(index)) throw ParseError("duplicate index", offset);
      m.emplace(index, parse_elem(coeffs_, std::string_view(line).substr(colon + 1)));
      offset += line.size() + 1;
    }
    return make(header.first, std::move(m));
  }

  /// Splits "trunc=<N> ring=<tag>".
  static std::pair<std::size_t, std::string> parse_header(const std::string& line) {
    std::istringstream h(line);
    std::string t, r;
    h >> t >> r;
    if (t.rfind("trunc=", 0) != 0 || r.rfind("ring=", 0) != 0)
      throw ParseError("expected header 'trunc=<N> ring=<tag>'", 0);
    std::size_t trunc = 0;
    try {
      trunc = std::stoull(t.substr(6));
    } catch (const std::logic_error&) {
      throw ParseError("bad truncation order", 6);
    }
    if (trunc == 0) throw ParseError("truncation order must be positive", 6);
    return {trunc, r.substr(5)};
  }

 private:
  R coeffs_;
};

/// The divided differential operator: D_i x^n = C(n, i) x^(n-i).
template <CommutativeRing R>
typename PolyRing<R>::Elem dp_apply(const PolyRing<R>& ring, std::size_t i,
                                    const typename PolyRing<R>::Elem& f) {
  const R& base = ring.base();
  std::vector<typename R::Elem> out;
  for (std::size_t n = i; n < f.coeffs.size(); ++n) {
    const std::uint32_t b = binom_mod_p(n, i, base.characteristic());
    if (out.empty()) out.assign(f.coeffs.size() - i, base.zero());
    if (b != 0) out[n - i] = base.mul(base.from_int(b), f.coeffs[n]);
  }
  return ring.from_coeffs(std::move(out));
}

}  // namespace lucas
