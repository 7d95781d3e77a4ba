#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lucas/carlitz.hpp"
#include "lucas/divided.hpp"
#include "lucas/rings.hpp"

namespace lucas {

using APoly = Poly<Fq>;          // element of A = F_q[th]
using AxPoly = Poly<APoly>;      // element of A[x] or A[t]
using FracElem = Frac<APoly>;    // element of Frac(A)
using FracxPoly = Poly<FracElem>;  // element of Frac(A)[x]

/// Function-field context over A = F_q[th] with the products D_t and
/// e_t(x) = prod_{deg a < t} (x - a) built eagerly for t <= max_t by direct
/// enumeration.
class CarlitzCtx {
 public:
  CarlitzCtx(FiniteField field, std::size_t max_t);
  /// Smallest context covering every digit position needed for indices < N.
  static CarlitzCtx for_truncation(FiniteField field, std::size_t N);

  const FiniteField& field() const { return field_; }
  std::uint64_t q() const { return field_.order(); }
  std::size_t max_t() const { return D_.size() - 1; }
  const PolyFq& A() const { return A_; }
  const FracA& frac() const { return frac_; }
  const PolyA& Ax() const { return ax_; }
  const PolyFracA& frac_x() const { return frac_x_; }

  /// Product of the monic polynomials of degree t.
  const APoly& D(std::size_t t) const;
  /// prod over a in A(t) of (x - a).
  const AxPoly& e(std::size_t t) const;

  /// All a in A with deg a < t, in code order (q^t elements).
  std::vector<APoly> below_degree(std::size_t t) const;
  /// e_{t+1} computed as e_t^q - D_t^{q-1} e_t; used as an independent check.
  AxPoly e_by_recursion(std::size_t t) const;

  /// The linear sequence (e_t / D_t) over Frac(A).
  LinearSeq<FracElem> basis_linear_seq() const;

 private:
  FiniteField field_;
  PolyFq A_;
  FracA frac_;
  PolyA ax_;
  PolyFracA frac_x_;
  std::vector<APoly> D_;
  std::vector<AxPoly> e_;
};

/// G_i(x) = prod_t (e_t(x)/D_t)^{i_t}, coefficients in Frac(A).
FracxPoly carlitz_basis(const CarlitzCtx& ctx, std::size_t i);
/// G_i(a) evaluated in Frac(A).
FracElem evaluate_basis(const CarlitzCtx& ctx, std::size_t i, const APoly& a);

struct IntegralityReport {
  bool all_integral = true;
  std::size_t checked = 0;
  std::vector<std::pair<std::size_t, APoly>> failures;  // (i, a)
};

IntegralityReport integrality_check(const CarlitzCtx& ctx, std::size_t i_max, const std::vector<APoly>& points);

/// sum_{i<N} G_i(alpha) D_i, with coefficients reduced into A.
/// Throws std::domain_error if some G_i(alpha) is not integral.
DividedElem<APoly> dirac(const CarlitzCtx& ctx, const APoly& alpha, std::size_t N);

/// One factor per digit position t with q^t < N: the generating function of
/// the Carlitz sequence built from e_t/D_t alone, evaluated at alpha.
std::vector<DividedElem<APoly>> dirac_factorization(const CarlitzCtx& ctx, const APoly& alpha, std::size_t N);

/// A[tau] with tau * a = a^q * tau. Elements are coefficient lists in A.
class SkewPolyRing {
 public:
  using Elem = Poly<APoly>;

  SkewPolyRing(PolyFq A, std::uint64_t q) : A_(std::move(A)), q_(q), view_(A_, "tau") {}

  const PolyFq& A() const { return A_; }
  Elem zero() const { return {}; }
  Elem one() const { return view_.one(); }
  Elem scalar(const APoly& a) const { return view_.constant(a); }
  Elem tau_power(std::size_t k) const { return view_.monomial(A_.one(), k); }
  Elem add(const Elem& a, const Elem& b) const { return view_.add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const;
  /// a^(q^k), i.e. the k-fold twist of an element of A.
  APoly twist(const APoly& a, std::size_t k) const;
  /// "a0 + a1*tau + a2*tau^2", increasing powers of tau.
  std::string format(const Elem& s) const;

 private:
  PolyFq A_;
  std::uint64_t q_;
  PolyA view_;  // same storage, commutative bookkeeping only
};

/// C_a with C_th = th + tau, C_{a+b} = C_a + C_b, C_{ab} = C_a C_b.
SkewPolyRing::Elem carlitz_action(const CarlitzCtx& ctx, const APoly& a);

/// A[t] with t as the variable over A.
PolyA pellarin_ring(const CarlitzCtx& ctx);
/// b_j(t) = prod_{e<j} (t - th^{q^e}).
AxPoly pellarin_b(const CarlitzCtx& ctx, std::size_t j);
/// A-linear map tau^j -> b_j(t).
AxPoly pellarin_map(const CarlitzCtx& ctx, const SkewPolyRing::Elem& s);
/// a(th) read as a(t) with constant coefficients in A.
AxPoly rename_theta_to_t(const CarlitzCtx& ctx, const APoly& a);

}  // namespace lucas
