// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "lucas/actions.hpp"
#include "lucas/binomial_seq.hpp"
#include "lucas/carlitz.hpp"
#include "lucas/carlitz_module.hpp"
#include "lucas/digits.hpp"
#include "lucas/explorer.hpp"
#include "lucas/expr.hpp"
#include "lucas/second_construction.hpp"
#include "oracles.hpp"

using namespace lucas;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Elem = DividedElem<Poly<Fq>>;

PolyFq ring_of(std::uint32_t q) { return PolyFq(FiniteField::of_order(q), "x"); }

Outcome lucas_vs_pascal() {
  Outcome o;
  const oracle::BigPascal pascal(512);
  std::size_t checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint64_t m = 0; m < 512; ++m)
      for (std::uint64_t n = 0; n <= m; ++n, ++checked)
        if (binom_mod_p(m, n, p) != pascal.mod(m, n, p))
          o.fail("C(" + std::to_string(m) + "," + std::to_string(n) + ") mod " + std::to_string(p));
  if (o.ok) o.detail = std::to_string(checked) + " coefficients";
  return o;
}

Outcome checker_equivalence() {
  Outcome o;
  gen::Rng rng(101);
  std::size_t failing = 0, total = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const auto R = ring_of(p);
    for (int k = 0; k < 100; ++k, ++total) {
      auto seq = gen::random_binomial_seq(p, 16, 4, rng);
      if (!seq) {
        o.fail("sampler found no sequence");
        return o;
      }
      if (k % 2) seq = gen::mutate(R, *seq, 4, rng);
      const auto b = check_binomial(R, *seq);
      const auto m = check_multiplicative(R, gen_function(R, *seq));
      if (!b.passed()) ++failing;
      if (b.passed() != m.pass || b.fail_index != m.fail_index)
        o.fail("disagreement for p=" + std::to_string(p) + " sample " + std::to_string(k));
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " sequences, " + std::to_string(failing) + " failing";
  return o;
}

Outcome group_laws() {
  Outcome o;
  gen::Rng rng(202);
  for (std::uint32_t p : {2u, 3u}) {
    const auto R = ring_of(p);
    const DividedRing<PolyFq> D(R);
    std::vector<Elem> samples;
    for (int k = 0; k < 50; ++k) {
      const auto seq = gen::random_binomial_seq(p, 32, 4, rng);
      if (!seq) {
        o.fail("sampler found no sequence");
        return o;
      }
      samples.push_back(gen_function(R, *seq));
    }
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& f = samples[k];
      const auto& g = samples[(k + 1) % samples.size()];
      const auto inv = D.inverse(f);
      if (!check_multiplicative(R, f).pass) o.fail("sample not multiplicative");
      if (!check_multiplicative(R, D.mul(f, g)).pass) o.fail("product not multiplicative");
      if (!check_multiplicative(R, inv).pass) o.fail("inverse not multiplicative");
      if (!(D.pow(f, p) == D.unit(32))) o.fail("f^p != 1");
      if (!(inv == D.pow(f, p - 1))) o.fail("inverse != f^(p-1)");
      if (!(D.mul(f, inv) == D.unit(32))) o.fail("f * f^-1 != 1");
    }
  }
  if (o.ok) o.detail = "50 samples each for p=2,3 at trunc 32";
  return o;
}

Outcome carlitz_construction() {
  Outcome o;
  gen::Rng rng(303);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto R = ring_of(q);
    const DividedRing<PolyFq> D(R);
    for (std::size_t N : {16u, 27u}) {
      for (int k = 0; k < 50; ++k) {
        const auto w = gen::random_linear_seq(R, rng, q, N, q * q);
        const auto v = gen::random_linear_seq(R, rng, q, N, q * q);
        const auto seq = carlitz_sequence(R, w, N);
        if (check_binomial(R, seq).verdict != Verdict::Pass) o.fail("construction fails the binomial check");
        if (!carlitz_sum_law(R, w, v, N).holds) o.fail("sum law fails");
        const auto inv = D.mul(gen_function(R, seq), gen_function(R, carlitz_sequence(R, negate(R, w), N)));
        if (!(inv == D.unit(N))) o.fail("inverse law fails");
      }
    }
  }
  if (o.ok) o.detail = "50 per (q, N), q in {2,3,4}, N in {16,27}";
  return o;
}

Outcome carlitz_basis_criterion() {
  Outcome o;
  const CarlitzCtx ctx(FiniteField(2), 4);
  const auto& A = ctx.A();
  if (!(ctx.e(1) == parse_elem(ctx.Ax(), "x^2 + x"))) o.fail("e_1 != x^2 + x");
  if (!(ctx.D(1) == parse_elem(A, "th^2 + th"))) o.fail("D_1 != th^2 + th");
  gen::Rng rng(404);
  std::vector<APoly> points;
  for (int k = 0; k < 20; ++k) points.push_back(A.random(rng, 4));
  if (!integrality_check(ctx, 15, points).all_integral) o.fail("some G_i(a) is not in A");
  const DividedRing<PolyFq> D(A);
  for (int k = 0; k < 20; ++k) {
    const auto a = A.random(rng, 4), b = A.random(rng, 4);
    if (!(D.mul(dirac(ctx, a, 16), dirac(ctx, b, 16)) == dirac(ctx, A.add(a, b), 16)))
      o.fail("dirac(a) dirac(b) != dirac(a+b)");
    auto product = D.unit(16);
    for (const auto& f : dirac_factorization(ctx, a, 16)) product = D.mul(product, f);
    if (!(product == dirac(ctx, a, 16))) o.fail("factorization product != dirac");
  }
  if (o.ok) o.detail = "320 integrality evaluations, 20 dirac pairs";
  return o;
}

Outcome second_construction() {
  Outcome o;
  gen::Rng rng(505);
  for (std::uint32_t q : {2u, 4u}) {
    const auto R = ring_of(q);
    const auto X = power_minus_one_sequence(2, 4);
    for (int k = 0; k < 20; ++k) {
      std::vector<Poly<Fq>> E;
      for (std::size_t j = 0; j < X.indices.size(); ++j) E.push_back(gen::random_nonzero_linear(R, rng, 2, 8));
      const auto f = build_second(R, X, E);
      if (!check_multiplicative(R, f).pass) o.fail("not multiplicative");
      if (is_in_carlitz_image(R, f, q).member) o.fail("lies in the Carlitz image for q=" + std::to_string(q));
      if (!(build_second_product(R, X, E) == f)) o.fail("sum form != product form");
    }
  }
  if (o.ok) o.detail = "20 samples each for q=2,4 over {1,3,7,15}";
  return o;
}

Outcome actions() {
  Outcome o;
  gen::Rng rng(606);
  const auto R = ring_of(2);
  const DividedRing<PolyFq> D(R);
  auto perm = [&] {
    std::vector<std::size_t> v{0, 1, 2, 3};
    std::shuffle(v.begin(), v.end(), rng);
    return make_digit_perm(2, v);
  };
  const auto r = parse_elem(R, "x^2 + x + 1");
  for (int k = 0; k < 100; ++k) {
    const auto s = perm();
    const auto f = gen::random_divided(R, rng, 16, 3), g = gen::random_divided(R, rng, 16, 3);
    const std::vector<std::pair<const char*, std::function<Elem(const Elem&)>>> ops{
        {"sigma", [&](const Elem& h) { return sigma_star_elem(D, s, h); }},
        {"pi1", [&](const Elem& h) { return pi1(D, h); }},
        {"pi2", [&](const Elem& h) { return pi2(D, h); }},
        {"pi3", [&](const Elem& h) { return pi3(D, r, h); }},
    };
    for (const auto& [name, op] : ops) {
      if (!(op(D.add(f, g)) == D.add(op(f), op(g)))) o.fail(std::string(name) + " not additive");
      if (!(op(D.mul(f, g)) == D.mul(op(f), op(g)))) o.fail(std::string(name) + " not multiplicative");
    }
  }
  for (int k = 0; k < 20; ++k) {
    const auto s = perm();
    const auto seq = gen::random_binomial_seq(2, 16, 4, rng);
    if (!seq || !check_multiplicative(R, sigma_star_elem(D, s, gen_function(R, *seq))).pass)
      o.fail("sigma breaks multiplicativity");
    const auto e = gen::random_linear_seq(R, rng, 2, 16, 8);
    const auto image = sigma_star_elem(D, s, gen_function(R, carlitz_sequence(R, e, 16)));
    if (!is_in_carlitz_image(R, image, 2).member) o.fail("sigma leaves the Carlitz image");
    const auto X = power_minus_one_sequence(2, 4);
    std::vector<Poly<Fq>> E;
    for (int j = 0; j < 4; ++j) E.push_back(gen::random_nonzero_linear(R, rng, 2, 8));
    const auto second = build_second(R, X, E, 16);
    if (is_in_carlitz_image(R, sigma_star_elem(D, s, second), 2).member)
      o.fail("sigma moves the null-sequence element into the image");
    const auto [Xs, order] = transport_null_seq(s, X);
    std::vector<Poly<Fq>> Es;
    for (auto j : order) Es.push_back(E[j]);
    if (!(sigma_star_elem(D, s, second) == build_second(R, Xs, Es, 16))) o.fail("sigma does not transport X");
  }
  if (o.ok) o.detail = "100 pairs per endomorphism, 20 stability samples";
  return o;
}

Outcome pellarin() {
  Outcome o;
  for (std::uint32_t q : {2u, 3u}) {
    const CarlitzCtx ctx(FiniteField(q), 1);
    const auto& A = ctx.A();
    const auto T = pellarin_ring(ctx);
    std::size_t count = 0;
    for (const auto& c : oracle::all_polys(A.base(), 4)) {
      ++count;
      if (!(pellarin_map(ctx, carlitz_action(ctx, c)) == rename_theta_to_t(ctx, c)))
        o.fail("pellarin(C_a) != a(t) for a = " + A.format(c));
    }
    if (count != static_cast<std::size_t>(q * q * q * q * q)) o.fail("enumeration size");
    std::uint64_t qj = 1;
    for (std::size_t j = 0; j < 6; ++j, qj *= q) {
      const auto root = T.constant(power(A, A.variable(), qj));
      if (!(pellarin_b(ctx, j + 1) == T.mul(T.sub(T.variable(), root), pellarin_b(ctx, j))))
        o.fail("b recursion fails at j=" + std::to_string(j));
    }
  }
  if (o.ok) o.detail = "all 32 + 243 elements of degree <= 4";
  return o;
}

Outcome explorer_oracle() {
  Outcome o;
  std::ostringstream summary;
  for (auto [p, N, d] : {std::tuple{2u, 4u, 2u}, {3u, 3u, 3u}}) {
    const auto got = enumerate({p, N, d, 1000000, 1});
    const auto want = oracle::brute_force_binomial(p, N, d);
    std::set<std::vector<std::vector<Fq>>> a, b;
    for (const auto& s : got.sequences) {
      std::vector<std::vector<Fq>> v;
      for (const auto& e : s.seq.entries) v.push_back(e.coeffs);
      a.insert(v);
    }
    for (const auto& s : want) {
      std::vector<std::vector<Fq>> v;
      for (const auto& e : s) v.push_back(e.coeffs);
      b.insert(v);
    }
    if (got.budget_exhausted || got.sequences.size() != want.size() || a != b)
      o.fail("mismatch for p=" + std::to_string(p) + ": " + std::to_string(got.sequences.size()) + " vs " +
             std::to_string(want.size()));
    summary << (summary.tellp() ? ", " : "") << "(" << p << "," << N << "," << d << "): " << want.size();
  }
  if (o.ok) o.detail = summary.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // --only <name> runs a single criterion; --list prints the names.
  const std::string only = argc > 2 && std::string(argv[1]) == "--only" ? argv[2] : "";
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"lucas_vs_pascal", lucas_vs_pascal},
      {"binomial_checker_equivalence", checker_equivalence},
      {"group_laws", group_laws},
      {"carlitz_construction", carlitz_construction},
      {"carlitz_basis", carlitz_basis_criterion},
      {"second_construction_separation", second_construction},
      {"actions", actions},
      {"pellarin_map", pellarin},
      {"explorer_oracle_match", explorer_oracle},
  };
  if (argc > 1 && std::string(argv[1]) == "--list") {
    for (const auto& c : criteria) std::cout << c.first << "\n";
    return 0;
  }
  int failures = 0, ran = 0;
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && only != name) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << time << ")" << (o.detail.empty() ? "" : ": ")
              << o.detail << std::endl;
    failures += !o.ok;
  }
  if (ran == 0) {
    std::cerr << "no criterion named '" << only << "'\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
