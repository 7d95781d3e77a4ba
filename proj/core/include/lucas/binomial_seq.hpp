#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/bivariate.hpp"
#include "lucas/digits.hpp"
#include "lucas/divided.hpp"
#include "lucas/expr.hpp"
#include "lucas/poly.hpp"

namespace lucas {

/// Finite prefix p_0, ..., p_{N-1} of a candidate binomial-type sequence.
template <class E>
struct PolySeq {
  std::vector<Poly<E>> entries;
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const PolySeq&, const PolySeq&) = default;
};

enum class Verdict { Pass, Fail, Trivial };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Trivial: return "trivial";
  }
  return "?";
}

/// Outcome of checking p_n(x+y) = sum_i C(n,i) p_i(x) p_{n-i}(y) for n < N.
struct BinomialReport {
  Verdict verdict = Verdict::Pass;
  std::size_t truncation = 0;
  std::optional<std::size_t> fail_index;
  std::optional<Monomial2> witness;
  bool p0_is_one = false;

  bool passed() const { return verdict != Verdict::Fail; }
  std::string describe() const {
    std::string s = std::string(to_string(verdict)) + " (N=" + std::to_string(truncation) + ")";
    if (fail_index) s += " at n=" + std::to_string(*fail_index) + ", witness monomial " + witness->to_string();
    return s;
  }
};

/// Outcome of checking f(x+y) = f(x) f(y) in F[x,y]{{D}} up to truncation.
struct MultiplicativeReport {
  bool pass = true;
  std::size_t truncation = 0;
  std::optional<std::size_t> fail_index;
  std::optional<Monomial2> witness;

  std::string describe() const {
    std::string s = std::string(pass ? "pass" : "fail") + " (trunc=" + std::to_string(truncation) + ")";
    if (fail_index) s += " at index " + std::to_string(*fail_index) + ", witness monomial " + witness->to_string();
    return s;
  }
};

template <CommutativeRing R>
BinomialReport check_binomial(const PolyRing<R>& ring, const PolySeq<typename R::Elem>& seq) {
  BinomialReport report;
  report.truncation = seq.size();
  bool all_zero = true;
  for (const auto& e : seq.entries) all_zero = all_zero && ring.is_zero(e);
  if (all_zero) {
    report.verdict = Verdict::Trivial;
    return report;
  }
  const Bivariate<R> bi(ring);
  const auto& B = bi.ring();
  const R& base = ring.base();
  const std::uint32_t p = ring.characteristic();
  std::vector<typename Bivariate<R>::Elem> in_x, in_y;
  for (const auto& e : seq.entries) {
    in_x.push_back(bi.embed_x(e));
    in_y.push_back(bi.embed_y(e));
  }
  for (std::size_t n = 0; n < seq.size(); ++n) {
    auto lhs = bi.substitute_sum(seq.entries[n]);
    auto rhs = B.zero();
    for (std::size_t i = 0; i <= n; ++i) {
      const std::uint32_t c = binom_mod_p(n, i, p);
      if (c == 0 || ring.is_zero(seq.entries[i]) || ring.is_zero(seq.entries[n - i])) continue;
      auto term = B.mul(in_x[i], in_y[n - i]);
      if (c != 1) term = B.scale(ring.constant(base.from_int(c)), term);
      rhs = B.add(rhs, term);
    }
    if (!(lhs == rhs)) {
      report.verdict = Verdict::Fail;
      report.fail_index = n;
      report.witness = bi.leading_monomial(B.sub(lhs, rhs));
      return report;
    }
  }
  // The identities at n = 0 .. N-1 force p_0 = 1 for a nontrivial prefix.
  report.p0_is_one = seq.entries[0] == ring.one();
  if (!report.p0_is_one) {
    report.verdict = Verdict::Fail;
    report.fail_index = 0;
    report.witness = Monomial2{};
  }
  return report;
}

/// f_H(x) = sum_i h_i(x) D_i with trunc = N.
template <CommutativeRing R>
DividedElem<Poly<typename R::Elem>> gen_function(const PolyRing<R>& ring, const PolySeq<typename R::Elem>& seq) {
  return DividedRing<PolyRing<R>>(ring).from_dense(seq.entries);
}

/// Coefficients of a divided element, read back as a sequence of length trunc.
template <CommutativeRing R>
PolySeq<typename R::Elem> sequence_of(const PolyRing<R>& ring, const DividedElem<Poly<typename R::Elem>>& f) {
  PolySeq<typename R::Elem> seq;
  seq.entries.assign(f.trunc, ring.zero());
  for (const auto& [i, c] : f.coeffs) seq.entries[i] = c;
  return seq;
}

template <CommutativeRing R>
MultiplicativeReport check_multiplicative(const PolyRing<R>& ring, const DividedElem<Poly<typename R::Elem>>& f) {
  const Bivariate<R> bi(ring);
  const DividedRing<typename Bivariate<R>::Ring> dB(bi.ring());
  std::map<std::size_t, typename Bivariate<R>::Elem> shifted, fx, fy;
  for (const auto& [i, c] : f.coeffs) {
    shifted.emplace(i, bi.substitute_sum(c));
    fx.emplace(i, bi.embed_x(c));
    fy.emplace(i, bi.embed_y(c));
  }
  const auto lhs = dB.make(f.trunc, std::move(shifted));
  const auto rhs = dB.mul(dB.make(f.trunc, std::move(fx)), dB.make(f.trunc, std::move(fy)));
  MultiplicativeReport report;
  report.truncation = f.trunc;
  const auto cmp = dB.compare(lhs, rhs);
  if (!cmp.equal) {
    const std::size_t k = *cmp.first_difference;
    report.pass = false;
    report.fail_index = k;
    report.witness = bi.leading_monomial(bi.ring().sub(dB.coeff(lhs, k), dB.coeff(rhs, k)));
  }
  return report;
}

enum class Builtin { Monomials, Pochhammer, DigitSum, TrivialUnit };

inline std::optional<Builtin> parse_builtin(std::string_view name) {
  if (name == "monomials") return Builtin::Monomials;
  if (name == "pochhammer") return Builtin::Pochhammer;
  if (name == "digitsum" || name == "digit_sum_q") return Builtin::DigitSum;
  if (name == "trivial_unit" || name == "unit") return Builtin::TrivialUnit;
  return std::nullopt;
}

/// Named sequences: {x^i}, the falling factorials (x)_n, {x^{l_q(i)}}, and
/// the unit sequence (1, 0, 0, ...).
template <CommutativeRing R>
PolySeq<typename R::Elem> builtin(const PolyRing<R>& ring, Builtin name, std::size_t N, std::uint64_t q = 0) {
  PolySeq<typename R::Elem> seq;
  const auto x = ring.variable();
  switch (name) {
    case Builtin::Monomials:
      for (std::size_t i = 0; i < N; ++i) seq.entries.push_back(ring.monomial(ring.base().one(), i));
      break;
    case Builtin::Pochhammer: {
      auto acc = ring.one();
      for (std::size_t i = 0; i < N; ++i) {
        seq.entries.push_back(acc);
        acc = ring.mul(acc, ring.sub(x, ring.from_int(static_cast<long long>(i))));
      }
      break;
    }
    case Builtin::DigitSum:
      if (q < 2) throw std::invalid_argument("digit-sum sequence needs q >= 2");
      for (std::size_t i = 0; i < N; ++i) seq.entries.push_back(ring.monomial(ring.base().one(), digit_sum(i, q)));
      break;
    case Builtin::TrivialUnit:
      for (std::size_t i = 0; i < N; ++i) seq.entries.push_back(i == 0 ? ring.one() : ring.zero());
      break;
  }
  return seq;
}

struct StructuralReport {
  bool additive_ok = true;
  std::optional<std::size_t> non_additive_index;
  bool pow_p_is_one = true;

  bool ok() const { return additive_ok && pow_p_is_one; }
};

/// p_{p^j} must be additive, and f_P^p must be the unit.
template <CommutativeRing R>
StructuralReport structural_checks(const PolyRing<R>& ring, const PolySeq<typename R::Elem>& seq) {
  StructuralReport report;
  const std::uint32_t p = ring.characteristic();
  for (std::uint64_t idx = 1; idx < seq.size(); idx *= p) {
    if (!is_q_linear(ring, seq.entries[idx], p)) {
      report.additive_ok = false;
      report.non_additive_index = idx;
      break;
    }
  }
  const DividedRing<PolyRing<R>> D(ring);
  const auto f = gen_function(ring, seq);
  report.pow_p_is_one = D.pow(f, p) == D.unit(f.trunc);
  return report;
}

/// Text form: header "N=<n> ring=<tag>", then one polynomial per line.
template <CommutativeRing R>
std::string format_sequence(const PolyRing<R>& ring, const PolySeq<typename R::Elem>& seq) {
  std::string out = "N=" + std::to_string(seq.size()) + " ring=" + ring.tag() + "\n";
  for (const auto& e : seq.entries) out += ring.format(e) + "\n";
  return out;
}

/// Splits "N=<n> ring=<tag>".
inline std::pair<std::size_t, std::string> parse_sequence_header(const std::string& line) {
  std::istringstream h(line);
  std::string n, r;
  h >> n >> r;
  if (n.rfind("N=", 0) != 0 || r.rfind("ring=", 0) != 0) throw ParseError("expected header 'N=<n> ring=<tag>'", 0);
  std::size_t count = 0;
  try {
    count = std::stoull(n.substr(2));
  } catch (const std::logic_error&) {
    throw ParseError("bad sequence length", 2);
  }
  return {count, r.substr(5)};
}

template <CommutativeRing R>
PolySeq<typename R::Elem> parse_sequence(const PolyRing<R>& ring, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty sequence text", 0);
  const auto [n, tag] = parse_sequence_header(line);
  if (tag != ring.tag()) throw ParseError("ring tag '" + tag + "' does not match " + ring.tag(), 0);
  PolySeq<typename R::Elem> seq;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    seq.entries.push_back(parse_elem(ring, line));
  }
  if (seq.size() != n)
    throw ParseError("expected " + std::to_string(n) + " entries, found " + std::to_string(seq.size()), 0);
  return seq;
}

}  // namespace lucas
