#include "lucas/carlitz_module.hpp"

#include <stdexcept>

namespace lucas {
namespace {

// Direct products range over q^t elements; keep that at desk scale.
constexpr std::uint64_t kMaxEnumeration = 1u << 14;

}  // namespace

CarlitzCtx::CarlitzCtx(FiniteField field, std::size_t max_t)
    : field_(field),
      A_(field, "th"),
      frac_(A_),
      ax_(A_, "x"),
      frac_x_(frac_, "x") {
  std::uint64_t count = 1;
  for (std::size_t t = 0; t <= max_t; ++t) {
    if (count > kMaxEnumeration) throw std::invalid_argument("q^t too large for direct enumeration");
    const auto lower = below_degree(t);
    const APoly lead = A_.monomial(field_.one(), t);
    APoly d = A_.one();
    for (const auto& b : lower) d = A_.mul(d, A_.add(lead, b));
    D_.push_back(std::move(d));

    AxPoly e = ax_.one();
    for (const auto& a : lower) e = ax_.mul(e, ax_.from_coeffs({A_.neg(a), A_.one()}));
    e_.push_back(std::move(e));
    count *= q();
  }
}

CarlitzCtx CarlitzCtx::for_truncation(FiniteField field, std::size_t N) {
  std::size_t t = 0;
  for (std::uint64_t power = field.order(); power < N; power *= field.order()) ++t;
  return CarlitzCtx(std::move(field), t);
}

const APoly& CarlitzCtx::D(std::size_t t) const {
  if (t >= D_.size()) throw std::out_of_range("D_t not built for t = " + std::to_string(t));
  return D_[t];
}

const AxPoly& CarlitzCtx::e(std::size_t t) const {
  if (t >= e_.size()) throw std::out_of_range("e_t not built for t = " + std::to_string(t));
  return e_[t];
}

std::vector<APoly> CarlitzCtx::below_degree(std::size_t t) const {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < t; ++k) count *= q();
  std::vector<APoly> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Fq> c(t);
    std::uint64_t rest = idx;
    for (std::size_t k = 0; k < t; ++k) {
      c[k] = Fq{static_cast<std::uint32_t>(rest % q())};
      rest /= q();
    }
    out.push_back(A_.from_coeffs(std::move(c)));
  }
  return out;
}

AxPoly CarlitzCtx::e_by_recursion(std::size_t t) const {
  const AxPoly& et = e(t);
  const APoly scale = power(A_, D(t), q() - 1);
  return ax_.sub(power(ax_, et, q()), ax_.scale(scale, et));
}

LinearSeq<FracElem> CarlitzCtx::basis_linear_seq() const {
  LinearSeq<FracElem> seq{q(), {}};
  for (std::size_t t = 0; t < e_.size(); ++t) {
    const FracElem inv_d = frac_.inv(frac_.embed(D_[t]));
    std::vector<FracElem> c;
    for (const auto& a : e_[t].coeffs) c.push_back(frac_.mul(frac_.embed(a), inv_d));
    seq.entries.push_back(frac_x_.from_coeffs(std::move(c)));
  }
  return seq;
}

FracxPoly carlitz_basis(const CarlitzCtx& ctx, std::size_t i) {
  const auto& R = ctx.frac_x();
  const auto& K = ctx.frac();
  FracxPoly acc = R.one();
  std::size_t t = 0;
  for (std::uint64_t rest = i; rest > 0; rest /= ctx.q(), ++t) {
    const std::uint64_t digit = rest % ctx.q();
    if (digit == 0) continue;
    const FracElem inv_d = K.inv(K.embed(ctx.D(t)));
    std::vector<FracElem> c;
    for (const auto& a : ctx.e(t).coeffs) c.push_back(K.mul(K.embed(a), inv_d));
    acc = R.mul(acc, power(R, R.from_coeffs(std::move(c)), digit));
  }
  return acc;
}

FracElem evaluate_basis(const CarlitzCtx& ctx, std::size_t i, const APoly& a) {
  return ctx.frac_x().evaluate(carlitz_basis(ctx, i), ctx.frac().embed(a));
}

IntegralityReport integrality_check(const CarlitzCtx& ctx, std::size_t i_max, const std::vector<APoly>& points) {
  IntegralityReport report;
  for (std::size_t i = 0; i <= i_max; ++i) {
    const FracxPoly g = carlitz_basis(ctx, i);
    for (const auto& a : points) {
      ++report.checked;
      if (!ctx.frac().is_integral(ctx.frac_x().evaluate(g, ctx.frac().embed(a)))) {
        report.all_integral = false;
        report.failures.emplace_back(i, a);
      }
    }
  }
  return report;
}

DividedElem<APoly> dirac(const CarlitzCtx& ctx, const APoly& alpha, std::size_t N) {
  std::map<std::size_t, APoly> c;
  for (std::size_t i = 0; i < N; ++i) {
    const FracElem v = evaluate_basis(ctx, i, alpha);
    if (!ctx.frac().is_integral(v))
      throw std::domain_error("G_" + std::to_string(i) + "(alpha) is not in A");
    c.emplace(i, v.num);
  }
  return DividedRing<PolyFq>(ctx.A()).make(N, std::move(c));
}

std::vector<DividedElem<APoly>> dirac_factorization(const CarlitzCtx& ctx, const APoly& alpha, std::size_t N) {
  const auto basis = ctx.basis_linear_seq();
  const DividedRing<PolyFq> D(ctx.A());
  std::vector<DividedElem<APoly>> factors;
  std::size_t t = 0;
  for (std::uint64_t pos = 1; pos < N; pos *= ctx.q(), ++t) {
    LinearSeq<FracElem> single{ctx.q(), std::vector<FracxPoly>(t + 1, ctx.frac_x().zero())};
    single.entries[t] = basis.entries.at(t);
    const auto seq = carlitz_sequence(ctx.frac_x(), single, N);
    std::map<std::size_t, APoly> c;
    for (std::size_t i = 0; i < N; ++i) {
      const FracElem v = ctx.frac_x().evaluate(seq.entries[i], ctx.frac().embed(alpha));
      if (!ctx.frac().is_integral(v)) throw std::domain_error("factor coefficient is not in A");
      c.emplace(i, v.num);
    }
    factors.push_back(D.make(N, std::move(c)));
  }
  return factors;
}

APoly SkewPolyRing::twist(const APoly& a, std::size_t k) const {
  // Coefficients lie in F_q, so a^(q^k) just spreads exponents by q^k.
  std::uint64_t step = 1;
  for (std::size_t i = 0; i < k; ++i) step *= q_;
  if (a.coeffs.empty()) return a;
  std::vector<Fq> c((a.coeffs.size() - 1) * step + 1, A_.base().zero());
  for (std::size_t m = 0; m < a.coeffs.size(); ++m) c[m * step] = a.coeffs[m];
  return A_.from_coeffs(std::move(c));
}

SkewPolyRing::Elem SkewPolyRing::mul(const Elem& a, const Elem& b) const {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  std::vector<APoly> r(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (A_.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (A_.is_zero(b.coeffs[j])) continue;
      r[i + j] = A_.add(r[i + j], A_.mul(a.coeffs[i], twist(b.coeffs[j], i)));
    }
  }
  return view_.from_coeffs(std::move(r));
}

std::string SkewPolyRing::format(const Elem& s) const {
  if (s.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    const APoly& c = s.coeffs[k];
    if (A_.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = A_.format(c, true);
    if (k > 0 && detail::is_composite_text(cs)) cs = "(" + cs + ")";
    if (k == 0)
      out += cs;
    else if (c == A_.one())
      out += detail::monomial_text("tau", k);
    else
      out += cs + "*" + detail::monomial_text("tau", k);
  }
  return out;
}

SkewPolyRing::Elem carlitz_action(const CarlitzCtx& ctx, const APoly& a) {
  const SkewPolyRing S(ctx.A(), ctx.q());
  const auto c_theta = S.add(S.scalar(ctx.A().variable()), S.tau_power(1));
  SkewPolyRing::Elem acc = S.zero();
  for (std::size_t k = a.coeffs.size(); k-- > 0;)
    acc = S.add(S.mul(acc, c_theta), S.scalar(ctx.A().constant(a.coeffs[k])));
  return acc;
}

PolyA pellarin_ring(const CarlitzCtx& ctx) { return PolyA(ctx.A(), "t"); }

AxPoly pellarin_b(const CarlitzCtx& ctx, std::size_t j) {
  const PolyA T = pellarin_ring(ctx);
  AxPoly acc = T.one();
  std::uint64_t exponent = 1;
  for (std::size_t e = 0; e < j; ++e, exponent *= ctx.q()) {
    const APoly root = ctx.A().monomial(ctx.field().one(), exponent);
    acc = T.mul(acc, T.from_coeffs({ctx.A().neg(root), ctx.A().one()}));
  }
  return acc;
}

AxPoly pellarin_map(const CarlitzCtx& ctx, const SkewPolyRing::Elem& s) {
  const PolyA T = pellarin_ring(ctx);
  AxPoly acc = T.zero();
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    if (ctx.A().is_zero(s.coeffs[j])) continue;
    acc = T.add(acc, T.scale(s.coeffs[j], pellarin_b(ctx, j)));
  }
  return acc;
}

AxPoly rename_theta_to_t(const CarlitzCtx& ctx, const APoly& a) {
  const PolyA T = pellarin_ring(ctx);
  std::vector<APoly> c;
  for (const auto& x : a.coeffs) c.push_back(ctx.A().constant(x));
  return T.from_coeffs(std::move(c));
}

}  // namespace lucas
