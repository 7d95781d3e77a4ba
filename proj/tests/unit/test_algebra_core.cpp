#include <gtest/gtest.h>

#include <random>

#include "lucas/bivariate.hpp"
#include "lucas/digits.hpp"
#include "lucas/expr.hpp"
#include "lucas/linalg.hpp"
#include "lucas/rings.hpp"
#include "oracles.hpp"

using namespace lucas;

namespace {

PolyFq poly_ring(std::uint32_t q, const char* var = "x") { return PolyFq(FiniteField::of_order(q), var); }

Poly<Fq> P(const PolyFq& R, const char* text) { return parse_elem(R, text); }

}  // namespace

TEST(Field, PrimeArithmetic) {
  const FiniteField F(5);
  EXPECT_EQ(F.add(Fq{3}, Fq{4}), Fq{2});
  EXPECT_EQ(F.mul(Fq{3}, Fq{4}), Fq{2});
  EXPECT_EQ(F.neg(Fq{1}), Fq{4});
  EXPECT_EQ(F.inv(Fq{2}), Fq{3});
  EXPECT_EQ(F.from_int(-1), Fq{4});
  EXPECT_THROW(F.inv(F.zero()), std::domain_error);
  EXPECT_THROW(F.generator(), std::logic_error);
}

TEST(Field, ExtensionFieldAxioms) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto F = FiniteField::of_order(q);
    ASSERT_EQ(F.order(), q);
    const auto els = F.elements();
    std::size_t nonzero_inverses = 0;
    for (auto a : els) {
      EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
      EXPECT_EQ(F.pow(a, q), a) << "a^q = a fails in F_" << q;
      if (!F.is_zero(a)) {
        EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
        ++nonzero_inverses;
      }
    }
    EXPECT_EQ(nonzero_inverses, q - 1);
    std::mt19937_64 rng(q);
    for (int k = 0; k < 200; ++k) {
      const auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
    }
  }
}

TEST(Field, RejectsReducibleModulus) {
  EXPECT_THROW(FiniteField(2, {1, 0, 1}), std::invalid_argument);  // u^2 + 1 = (u+1)^2
  EXPECT_THROW(FiniteField(4, {1, 1, 1}), std::invalid_argument);  // 4 is not prime
  EXPECT_NO_THROW(FiniteField(3, {1, 0, 1}));                      // u^2 + 1 over F_3
}

TEST(Field, ModulusOverride) {
  const FiniteField F(3, {1, 0, 1});
  const Fq u = F.generator();
  EXPECT_EQ(F.mul(u, u), F.from_int(-1));
  EXPECT_EQ(make_field(9, std::vector<std::uint32_t>{1, 0, 1}), F);
  EXPECT_THROW(make_field(27, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
}

TEST(Field, FormatExtensionElements) {
  const auto F = FiniteField::of_order(4);
  const Fq u = F.generator();
  EXPECT_EQ(F.format(F.add(u, F.one())), "u + 1");
  EXPECT_EQ(F.format(F.add(u, F.one()), true), "u+1");
  EXPECT_EQ(F.format(F.zero()), "0");
}

TEST(Lucas, Examples) {
  EXPECT_EQ(binom_mod_p(5, 2, 2), 0u);
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint64_t m : {0ull, 1ull, 17ull, 1000ull}) EXPECT_EQ(binom_mod_p(m, 0, p), 1u);
  EXPECT_EQ(binom_mod_p(5, 1, 5), 0u);
  EXPECT_EQ(binom_mod_p(3, 5, 3), 0u);  // n > m
}

TEST(Lucas, MatchesBigIntegerPascal) {
  const oracle::BigPascal pascal(512);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t m = 0; m < 512; ++m)
      for (std::size_t n = 0; n <= m; ++n) ASSERT_EQ(binom_mod_p(m, n, p), pascal.mod(m, n, p)) << m << " " << n;
}

TEST(Lucas, FieldOverloadLandsInPrimeSubfield) {
  const auto F = FiniteField::of_order(9);
  EXPECT_EQ(binom_mod_p(4, 1, F), F.one());  // C(4,1) = 4 = 1 mod 3
  EXPECT_EQ(binom_mod_p(5, 1, F), F.from_int(2));
}

TEST(Digits, Examples) {
  EXPECT_EQ(digit_sum(5, 2), 2u);
  EXPECT_EQ(digit_sum(0, 7), 0u);
  EXPECT_EQ(digit_sum(26, 3), 6u);  // 26 = 222_3
  EXPECT_EQ(to_digits(0, 3).digits.size(), 0u);
  EXPECT_EQ(to_digits(5, 2).digits, (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(digit_at(21, 3, 2), 2u);
  EXPECT_TRUE(is_power_of(1, 3));
  EXPECT_TRUE(is_power_of(81, 3));
  EXPECT_FALSE(is_power_of(0, 3));
  EXPECT_FALSE(is_power_of(12, 2));
}

TEST(Digits, RoundTrip) {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 9ull})
    for (std::uint64_t n = 0; n < 1000000; ++n) ASSERT_EQ(from_digits(to_digits(n, q)), n);
}

TEST(Poly, ParseAndCanonicalFormat) {
  const auto R = poly_ring(3);
  EXPECT_EQ(R.format(P(R, "x^2 - x")), "x^2 + 2*x");
  EXPECT_EQ(R.format(P(R, "(x+1)^3")), "x^3 + 1");
  EXPECT_EQ(R.format(R.zero()), "0");
  EXPECT_EQ(R.degree(R.zero()), std::nullopt);
  const auto R4 = poly_ring(4);
  EXPECT_EQ(R4.format(P(R4, "(u+1)*x^2 + u*x")), "(u+1)*x^2 + u*x");
  const PolyA Ax(poly_ring(2, "th"), "x");
  EXPECT_EQ(Ax.format(parse_elem(Ax, "x^3 + (th^2+th)*x")), "x^3 + (th^2+th)*x");
}

TEST(Poly, ParseErrors) {
  const auto R = poly_ring(2);
  EXPECT_THROW(P(R, "x^"), ParseError);
  EXPECT_THROW(P(R, "y + 1"), ParseError);
  EXPECT_THROW(P(R, "(x + 1"), ParseError);
  EXPECT_THROW(P(R, "x / x"), ParseError);
}

TEST(Poly, FormatRoundTrip) {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    const auto R = poly_ring(q);
    for (int k = 0; k < 100; ++k) {
      const auto f = R.random(rng, 8);
      EXPECT_EQ(P(R, R.format(f).c_str()), f);
    }
  }
}

TEST(Poly, DivmodAndGcd) {
  const auto R = poly_ring(3);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto a = R.random(rng, 7), b = R.random(rng, 4);
    if (R.is_zero(b)) continue;
    const auto [quo, rem] = R.divmod(a, b);
    EXPECT_EQ(R.add(R.mul(quo, b), rem), a);
    if (!R.is_zero(rem)) EXPECT_LT(*R.degree(rem), *R.degree(b));
    const auto g = R.gcd(a, b);
    EXPECT_TRUE(R.is_zero(R.divmod(a, g).second));
    EXPECT_TRUE(R.is_zero(R.divmod(b, g).second));
  }
}

TEST(Fraction, ReducedCanonicalForm) {
  const auto A = poly_ring(2, "th");
  const FracA K(A);
  const auto a = K.make(P(A, "th^2 + th"), P(A, "th"));
  EXPECT_EQ(a.num, P(A, "th + 1"));
  EXPECT_EQ(a.den, A.one());
  EXPECT_TRUE(K.is_integral(a));
  const auto b = K.make(A.one(), P(A, "th^2+th"));
  EXPECT_EQ(K.mul(b, K.embed(P(A, "th"))), K.make(A.one(), P(A, "th+1")));
  EXPECT_EQ(K.add(b, K.neg(b)), K.zero());
  EXPECT_THROW(K.inv(K.zero()), std::domain_error);
}

TEST(SubstituteSum, Examples) {
  const auto R = poly_ring(2);
  const Bivariate<FiniteField> bi(R);
  const auto x2 = bi.substitute_sum(P(R, "x^2"));
  EXPECT_EQ(bi.coefficient(x2, 2, 0), Fq{1});
  EXPECT_EQ(bi.coefficient(x2, 0, 2), Fq{1});
  EXPECT_EQ(bi.coefficient(x2, 1, 1), Fq{0});
  const auto x3 = bi.substitute_sum(P(R, "x^3"));
  for (auto [i, j] : {std::pair{3, 0}, {2, 1}, {1, 2}, {0, 3}}) EXPECT_EQ(bi.coefficient(x3, i, j), Fq{1});
  const auto x = bi.substitute_sum(R.variable());
  EXPECT_EQ(x, bi.ring().add(bi.embed_x(R.variable()), bi.embed_y(R.variable())));
}

TEST(SubstituteSum, MatchesRepeatedMultiplicationAndRestricts) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto R = poly_ring(q);
    const Bivariate<FiniteField> bi(R);
    oracle::SumPowers sp(R.base());
    for (int k = 0; k < 50; ++k) {
      const auto f = R.random(rng, 12);
      const auto g = bi.substitute_sum(f);
      EXPECT_EQ(bi.at_y_zero(g), f);
      EXPECT_TRUE(bi.is_symmetric(g));
      const auto expected = oracle::shifted(R.base(), sp, f);
      for (std::size_t i = 0; i <= 12; ++i)
        for (std::size_t j = 0; i + j <= 12; ++j) {
          const Fq want = i < expected.c.size() && j < expected.c[i].size() ? expected.c[i][j] : Fq{0};
          ASSERT_EQ(bi.coefficient(g, i, j), want);
        }
    }
  }
}

TEST(QLinear, Examples) {
  const auto R2 = poly_ring(2), R3 = poly_ring(3);
  EXPECT_TRUE(is_q_linear(R2, P(R2, "x^2 + x"), 2));
  EXPECT_FALSE(is_q_linear(R2, P(R2, "x^3"), 2));
  EXPECT_TRUE(is_q_linear(R3, P(R3, "x^9 + 2*x^3"), 3));
  EXPECT_TRUE(is_q_linear(R3, R3.zero(), 3));
  EXPECT_FALSE(is_q_linear(R3, R3.one(), 3));
  const auto R4 = poly_ring(4);
  EXPECT_TRUE(is_q_linear(R4, P(R4, "x^2"), 2));
  EXPECT_FALSE(is_q_linear(R4, P(R4, "x^2"), 4));
}

TEST(QLinear, ImpliesAdditive) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    const auto R = poly_ring(q);
    for (int k = 0; k < 200; ++k) {
      const auto f = R.random(rng, 10);
      if (is_q_linear(R, f, q)) EXPECT_TRUE(oracle::is_additive(R.base(), f));
      if (is_q_linear(R, f, R.characteristic())) EXPECT_TRUE(oracle::is_additive(R.base(), f));
    }
  }
}

TEST(Linalg, Examples) {
  const FiniteField F2(2), F3(3);
  auto s = solve_affine_system(F2, Matrix::from_rows({{Fq{1}}}), {Fq{1}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, std::vector<Fq>{Fq{1}});
  EXPECT_TRUE(s->kernel.empty());
  EXPECT_FALSE(solve_affine_system(F2, Matrix::from_rows({{Fq{0}}}), {Fq{1}}));
  s = solve_affine_system(F2, Matrix::from_rows({{Fq{1}, Fq{1}}}), {Fq{0}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (std::vector<Fq>{Fq{0}, Fq{0}}));
  ASSERT_EQ(s->kernel.size(), 1u);
  EXPECT_EQ(s->kernel[0], (std::vector<Fq>{Fq{1}, Fq{1}}));
  EXPECT_THROW(solve_affine_system(F3, Matrix(2, 2), {Fq{0}}), std::invalid_argument);
}

TEST(Linalg, SolutionsSatisfySystem) {
  std::mt19937_64 rng(13);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto F = FiniteField::of_order(q);
    for (int k = 0; k < 200; ++k) {
      std::uniform_int_distribution<std::size_t> dim(1, 6);
      const std::size_t r = dim(rng), c = dim(rng);
      Matrix M(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M.at(i, j) = F.random(rng);
      // A consistent right-hand side from a known solution.
      std::vector<Fq> v(c);
      for (auto& e : v) e = F.random(rng);
      const auto rhs = mat_vec(F, M, v);
      const auto s = solve_affine_system(F, M, rhs);
      ASSERT_TRUE(s);
      EXPECT_EQ(mat_vec(F, M, s->particular), rhs);
      for (const auto& kvec : s->kernel) {
        std::vector<Fq> sum(c);
        for (std::size_t j = 0; j < c; ++j) sum[j] = F.add(s->particular[j], kvec[j]);
        EXPECT_EQ(mat_vec(F, M, sum), rhs);
        EXPECT_EQ(mat_vec(F, M, kvec), std::vector<Fq>(r, F.zero()));
      }
    }
  }
}

TEST(RingTags, ParseAndRender) {
  for (const char* tag : {"F_2", "F_9", "F_3[x]", "F_4[th][x]", "F_2(th)", "F_2(th)[x]"})
    EXPECT_EQ(ring_tag(parse_ring_tag(tag)), tag);
  EXPECT_THROW(parse_ring_tag("Q[x]"), ParseError);
  EXPECT_THROW(parse_ring_tag("F_6[x]"), std::invalid_argument);
  EXPECT_EQ(parse_modulus(3, "u^2 + 1"), (std::vector<std::uint32_t>{1, 0, 1}));
}
