#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lucas/binomial_seq.hpp"
#include "lucas/carlitz.hpp"
#include "lucas/divided.hpp"
#include "lucas/second_construction.hpp"

namespace lucas {

/// Permutation of the digit positions {0, ..., K-1} in base q.
struct DigitPerm {
  std::uint64_t q = 2;
  std::size_t K = 0;
  std::vector<std::size_t> perm;  // position i goes to perm[i]

  std::uint64_t window() const;  // q^K
  friend bool operator==(const DigitPerm&, const DigitPerm&) = default;
};

/// Throws std::invalid_argument unless `perm` is a bijection of {0..K-1}.
DigitPerm make_digit_perm(std::uint64_t q, std::vector<std::size_t> perm);
DigitPerm identity_perm(std::uint64_t q, std::size_t K);
/// "0>1,1>0" lists i>sigma(i); positions not mentioned are fixed. Throws
/// ParseError on bad text and std::invalid_argument on a non-bijection.
DigitPerm parse_digit_perm(std::string_view text, std::uint64_t q, std::size_t K);
/// (a after b)(i) = a(b(i)).
DigitPerm compose(const DigitPerm& a, const DigitPerm& b);
DigitPerm inverse(const DigitPerm& s);

/// sum_i n_i q^i  ->  sum_i n_i q^{sigma(i)}. Throws std::out_of_range if n >= q^K.
std::uint64_t sigma_star_index(const DigitPerm& s, std::uint64_t n);

/// X^sigma re-sorted by the new index; order[k] is the original position of
/// the k-th transported index, so E is carried along as E[order[k]].
std::pair<NullSeq, std::vector<std::size_t>> transport_null_seq(const DigitPerm& s, const NullSeq& x);

/// D_i -> D_{sigma_* i}; f.trunc must equal q^K.
template <CommutativeRing R>
DividedElem<typename R::Elem> sigma_star_elem(const DividedRing<R>& D, const DigitPerm& s,
                                              const DividedElem<typename R::Elem>& f) {
  if (f.trunc != s.window())
    throw std::invalid_argument("sigma acts only at truncation q^K = " + std::to_string(s.window()));
  std::map<std::size_t, typename R::Elem> m;
  for (const auto& [i, c] : f.coeffs) m.emplace(static_cast<std::size_t>(sigma_star_index(s, i)), c);
  return D.make(f.trunc, std::move(m));
}

/// Coefficientwise Frobenius a_i -> a_i^p.
template <CommutativeRing R>
DividedElem<typename R::Elem> pi1(const DividedRing<R>& D, const DividedElem<typename R::Elem>& f) {
  std::map<std::size_t, typename R::Elem> m;
  for (const auto& [i, c] : f.coeffs) m.emplace(i, power(D.coefficient_ring(), c, D.characteristic()));
  return D.make(f.trunc, std::move(m));
}

/// D_i -> D_{p i}; the result has trunc p (N - 1) + 1 with zeros between.
template <CommutativeRing R>
DividedElem<typename R::Elem> pi2(const DividedRing<R>& D, const DividedElem<typename R::Elem>& f) {
  const std::size_t p = D.characteristic();
  std::map<std::size_t, typename R::Elem> m;
  for (const auto& [i, c] : f.coeffs) m.emplace(p * i, c);
  return D.make(p * (f.trunc - 1) + 1, std::move(m));
}

/// a_i -> r^i a_i.
template <CommutativeRing R>
DividedElem<typename R::Elem> pi3(const DividedRing<R>& D, const typename R::Elem& r,
                                  const DividedElem<typename R::Elem>& f) {
  const R& ring = D.coefficient_ring();
  std::map<std::size_t, typename R::Elem> m;
  for (const auto& [i, c] : f.coeffs) m.emplace(i, ring.mul(power(ring, r, i), c));
  return D.make(f.trunc, std::move(m));
}

struct StabilityReport {
  MultiplicativeReport before;
  MultiplicativeReport after;
  std::optional<bool> image_before;  // set only when q was supplied
  std::optional<bool> image_after;
  std::string describe() const;
};

/// Applies `action` to f and re-runs the multiplicativity check, plus the
/// Carlitz-image test for the given q when one is supplied.
template <CommutativeRing R>
StabilityReport stability_report(
    const PolyRing<R>& ring,
    const std::function<DividedElem<Poly<typename R::Elem>>(const DividedElem<Poly<typename R::Elem>>&)>& action,
    const DividedElem<Poly<typename R::Elem>>& f, std::optional<std::uint64_t> q = std::nullopt) {
  StabilityReport r;
  r.before = check_multiplicative(ring, f);
  const auto g = action(f);
  r.after = check_multiplicative(ring, g);
  if (q) {
    r.image_before = is_in_carlitz_image(ring, f, *q).member;
    r.image_after = is_in_carlitz_image(ring, g, *q).member;
  }
  return r;
}

}  // namespace lucas
