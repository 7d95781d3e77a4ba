#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lucas/bivariate.hpp"
#include "lucas/divided.hpp"

namespace lucas {

/// Indices i_0 < i_1 < ... whose divided symbols satisfy D_{i_j} D_{i_t} = 0
/// for every pair, j = t included.
struct NullSeq {
  std::uint32_t p = 2;
  std::vector<std::uint64_t> indices;
  friend bool operator==(const NullSeq&, const NullSeq&) = default;
};

struct NullCheck {
  bool is_null = true;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;  // (i_j, i_t) with C(i_j+i_t, i_t) != 0
};

/// Throws std::invalid_argument unless indices are strictly increasing and >= 1.
NullCheck is_null_sequence(std::span<const std::uint64_t> indices, std::uint32_t p);

/// Validated constructor; throws std::invalid_argument when the check fails.
NullSeq make_null_seq(std::vector<std::uint64_t> indices, std::uint32_t p);

/// {p^i - 1 : 1 <= i <= count}.
NullSeq power_minus_one_sequence(std::uint32_t p, std::size_t count);

/// All maximal null subsets of [1, bound), depth-first with smallest index
/// first; stops after `limit` sequences.
std::vector<NullSeq> enumerate_maximal_null_sequences(std::uint32_t p, std::uint64_t bound, std::size_t limit);

/// "p=<p>" header line, then the comma-separated indices.
std::string format_null_seq(const NullSeq& x);
NullSeq parse_null_seq(std::string_view text);

/// f_{X,E} = 1 + sum_j e_j(x) D_{i_j}; every e_j must be p-linear. The
/// default truncation is max index + 1.
template <CommutativeRing R>
DividedElem<Poly<typename R::Elem>> build_second(const PolyRing<R>& ring, const NullSeq& x,
                                                 const std::vector<Poly<typename R::Elem>>& e,
                                                 std::optional<std::size_t> trunc = std::nullopt) {
  if (e.size() != x.indices.size()) throw std::invalid_argument("need one additive polynomial per null index");
  if (x.p != ring.characteristic()) throw std::invalid_argument("null sequence built for a different characteristic");
  for (std::size_t j = 0; j < e.size(); ++j)
    if (!is_q_linear(ring, e[j], x.p)) throw std::invalid_argument("entry " + std::to_string(j) + " is not additive");
  const std::size_t n = trunc ? *trunc : (x.indices.empty() ? 1 : static_cast<std::size_t>(x.indices.back()) + 1);
  std::map<std::size_t, Poly<typename R::Elem>> c;
  c.emplace(0, ring.one());
  for (std::size_t j = 0; j < e.size(); ++j) c.emplace(static_cast<std::size_t>(x.indices[j]), e[j]);
  return DividedRing<PolyRing<R>>(ring).make(n, std::move(c));
}

/// prod_j (1 + e_j(x) D_{i_j}) computed with the divided-power product.
template <CommutativeRing R>
DividedElem<Poly<typename R::Elem>> build_second_product(const PolyRing<R>& ring, const NullSeq& x,
                                                         const std::vector<Poly<typename R::Elem>>& e,
                                                         std::optional<std::size_t> trunc = std::nullopt) {
  if (e.size() != x.indices.size()) throw std::invalid_argument("need one additive polynomial per null index");
  const std::size_t n = trunc ? *trunc : (x.indices.empty() ? 1 : static_cast<std::size_t>(x.indices.back()) + 1);
  const DividedRing<PolyRing<R>> D(ring);
  auto acc = D.unit(n);
  for (std::size_t j = 0; j < e.size(); ++j)
    acc = D.mul(acc, D.add(D.unit(n), D.symbol(static_cast<std::size_t>(x.indices[j]), n, e[j])));
  return acc;
}

/// True iff f = 1 + sum over a null support of p-linear coefficients.
template <CommutativeRing R>
bool is_second_form(const PolyRing<R>& ring, const DividedElem<Poly<typename R::Elem>>& f) {
  const DividedRing<PolyRing<R>> D(ring);
  if (!D.has_unit_constant(f)) return false;
  std::vector<std::uint64_t> support;
  for (const auto& [i, c] : f.coeffs) {
    if (i == 0) continue;
    if (!is_q_linear(ring, c, ring.characteristic())) return false;
    support.push_back(i);
  }
  return is_null_sequence(support, ring.characteristic()).is_null;
}

}  // namespace lucas
