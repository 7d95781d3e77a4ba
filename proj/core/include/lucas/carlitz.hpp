#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lucas/binomial_seq.hpp"
#include "lucas/bivariate.hpp"
#include "lucas/digits.hpp"
#include "lucas/divided.hpp"

namespace lucas {

/// Finitely supported sequence e_0, e_1, ... of F_q-linear polynomials;
/// entries beyond the stored ones are zero.
template <class E>
struct LinearSeq {
  std::uint64_t q = 2;
  std::vector<Poly<E>> entries;
};

namespace detail {

inline void require_power_of_characteristic(std::uint64_t q, std::uint32_t p) {
  if (q < 2 || !is_power_of(q, p))
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a power of the characteristic " +
                                std::to_string(p));
}

}  // namespace detail

/// Validates that every entry is q-linear.
template <CommutativeRing R>
LinearSeq<typename R::Elem> make_linear_seq(const PolyRing<R>& ring, std::uint64_t q,
                                            std::vector<Poly<typename R::Elem>> entries) {
  detail::require_power_of_characteristic(q, ring.characteristic());
  for (std::size_t t = 0; t < entries.size(); ++t)
    if (!is_q_linear(ring, entries[t], q))
      throw std::invalid_argument("entry " + std::to_string(t) + " is not " + std::to_string(q) + "-linear");
  return LinearSeq<typename R::Elem>{q, std::move(entries)};
}

template <CommutativeRing R>
LinearSeq<typename R::Elem> add(const PolyRing<R>& ring, const LinearSeq<typename R::Elem>& w,
                                const LinearSeq<typename R::Elem>& v) {
  if (w.q != v.q) throw std::invalid_argument("linear sequences over different q");
  LinearSeq<typename R::Elem> out{w.q, {}};
  const std::size_t n = std::max(w.entries.size(), v.entries.size());
  for (std::size_t t = 0; t < n; ++t) {
    const auto a = t < w.entries.size() ? w.entries[t] : ring.zero();
    const auto b = t < v.entries.size() ? v.entries[t] : ring.zero();
    out.entries.push_back(ring.add(a, b));
  }
  return out;
}

template <CommutativeRing R>
LinearSeq<typename R::Elem> negate(const PolyRing<R>& ring, const LinearSeq<typename R::Elem>& w) {
  LinearSeq<typename R::Elem> out{w.q, {}};
  for (const auto& e : w.entries) out.entries.push_back(ring.neg(e));
  return out;
}

/// Entry i is prod_t e_t(x)^{i_t} over the base-q digits of i.
template <CommutativeRing R>
PolySeq<typename R::Elem> carlitz_sequence(const PolyRing<R>& ring, const LinearSeq<typename R::Elem>& e,
                                           std::size_t N) {
  if (N == 0) throw std::invalid_argument("sequence length must be positive");
  const std::uint64_t q = e.q;
  const auto zero = ring.zero();
  // powers[t][k] = e_t^k, built on demand.
  std::vector<std::vector<Poly<typename R::Elem>>> powers;
  auto power_of = [&](std::size_t t, std::uint64_t k) -> const Poly<typename R::Elem>& {
    if (powers.size() <= t) powers.resize(t + 1, std::vector<Poly<typename R::Elem>>{ring.one()});
    auto& row = powers[t];
    const auto& base = t < e.entries.size() ? e.entries[t] : zero;
    while (row.size() <= k) row.push_back(ring.mul(row.back(), base));
    return row[k];
  };
  PolySeq<typename R::Elem> seq;
  seq.entries.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    auto acc = ring.one();
    std::size_t t = 0;
    for (std::uint64_t rest = i; rest > 0; rest /= q, ++t) {
      const std::uint64_t digit = rest % q;
      if (digit == 0) continue;
      acc = ring.mul(acc, power_of(t, digit));
      if (ring.is_zero(acc)) break;
    }
    seq.entries.push_back(std::move(acc));
  }
  return seq;
}

template <class E>
struct SumLawReport {
  bool holds = false;
  WindowComparison comparison;
  DividedElem<Poly<E>> product;  // f_{P_W} * f_{P_V}
  DividedElem<Poly<E>> sum_side;  // f_{P_{W+V}}
};

/// Compares f_{P_W} * f_{P_V} with f_{P_{W+V}} at truncation N.
template <CommutativeRing R>
SumLawReport<typename R::Elem> carlitz_sum_law(const PolyRing<R>& ring, const LinearSeq<typename R::Elem>& w,
                                               const LinearSeq<typename R::Elem>& v, std::size_t N) {
  const DividedRing<PolyRing<R>> D(ring);
  SumLawReport<typename R::Elem> r;
  r.product = D.mul(gen_function(ring, carlitz_sequence(ring, w, N)), gen_function(ring, carlitz_sequence(ring, v, N)));
  r.sum_side = gen_function(ring, carlitz_sequence(ring, add(ring, w, v), N));
  r.comparison = D.compare(r.product, r.sum_side);
  r.holds = r.comparison.equal;
  return r;
}

template <class E>
struct ImageReport {
  bool member = false;
  std::size_t window = 0;
  std::optional<std::size_t> witness;  // first index where the Carlitz shape fails
  std::string reason;
  LinearSeq<E> reconstructed;  // e_t read off at D_{q^t}, q^t < window
};

/// Decides whether f equals the generating function of some Carlitz
/// sequence on the window [0, trunc). Sound and complete for that window.
template <CommutativeRing R>
ImageReport<typename R::Elem> is_in_carlitz_image(const PolyRing<R>& ring, const DividedElem<Poly<typename R::Elem>>& f,
                                                  std::uint64_t q) {
  detail::require_power_of_characteristic(q, ring.characteristic());
  const DividedRing<PolyRing<R>> D(ring);
  if (!D.has_unit_constant(f)) throw std::invalid_argument("constant coefficient must be 1");
  ImageReport<typename R::Elem> report;
  report.window = f.trunc;
  report.reconstructed.q = q;
  for (std::uint64_t idx = 1; idx < f.trunc; idx *= q) {
    report.reconstructed.entries.push_back(D.coeff(f, idx));
    if (!is_q_linear(ring, report.reconstructed.entries.back(), q)) {
      report.witness = idx;
      report.reason = "coefficient at index " + std::to_string(idx) + " is not " + std::to_string(q) + "-linear";
      return report;
    }
    if (idx > f.trunc / q) break;
  }
  const auto expected = carlitz_sequence(ring, report.reconstructed, f.trunc);
  for (std::size_t i = 0; i < f.trunc; ++i) {
    if (!(D.coeff(f, i) == expected.entries[i])) {
      report.witness = i;
      report.reason = "coefficient at index " + std::to_string(i) + " differs from the digit product";
      return report;
    }
  }
  report.member = true;
  report.reason = "matches the Carlitz construction on indices < " + std::to_string(f.trunc);
  return report;
}

}  // namespace lucas
