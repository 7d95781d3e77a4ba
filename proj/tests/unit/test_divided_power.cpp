#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "lucas/divided.hpp"
#include "lucas/expr.hpp"
#include "lucas/rings.hpp"
#include "oracles.hpp"

using namespace lucas;

namespace {

struct Env {
  explicit Env(std::uint32_t q) : R(FiniteField::of_order(q), "x"), D(R) {}
  PolyFq R;
  DividedRing<PolyFq> D;
  Poly<Fq> poly(const char* s) const { return parse_elem(R, s); }
  DividedElem<Poly<Fq>> elem(std::size_t trunc, std::initializer_list<std::pair<std::size_t, const char*>> c) const {
    std::map<std::size_t, Poly<Fq>> m;
    for (auto [i, s] : c) m.emplace(i, poly(s));
    return D.make(trunc, std::move(m));
  }
};

}  // namespace

TEST(DividedMul, Examples) {
  const Env e2(2), e5(5);
  EXPECT_EQ(e2.D.mul(e2.D.symbol(1, 8), e2.D.symbol(1, 8)), e2.D.zero(8));
  EXPECT_EQ(e5.D.mul(e5.D.symbol(2, 8), e5.D.symbol(3, 8)), e5.D.zero(8));
  const auto f = e2.elem(6, {{0, "x"}, {3, "x^2+1"}});
  EXPECT_EQ(e2.D.mul(e2.D.unit(6), f), f);
  // D_1 * D_2 = C(3,1) D_3 = D_3 over F_2.
  EXPECT_EQ(e2.D.mul(e2.D.symbol(1, 8), e2.D.symbol(2, 8)), e2.D.symbol(3, 8));
}

TEST(DividedMul, TruncationIsMinimum) {
  const Env e(3);
  const auto a = e.elem(5, {{0, "1"}, {4, "x"}});
  const auto b = e.elem(3, {{0, "1"}, {1, "x"}});
  const auto c = e.D.mul(a, b);
  EXPECT_EQ(c.trunc, 3u);
  EXPECT_EQ(e.D.add(a, b).trunc, 3u);
  EXPECT_THROW(e.D.coeff(c, 3), std::out_of_range);
  EXPECT_THROW(e.D.zero(0), std::invalid_argument);
}

TEST(DividedMul, MatchesDensePascalProduct) {
  gen::Rng rng(21);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto F = FiniteField::of_order(q);
    const DividedRing<FiniteField> D(F);
    for (int k = 0; k < 50; ++k) {
      std::vector<Fq> a(40), b(40);
      for (auto& x : a) x = F.random(rng);
      for (auto& x : b) x = F.random(rng);
      EXPECT_EQ(D.mul(D.from_dense(a), D.from_dense(b)), D.from_dense(oracle::dp_mul_dense(F, a, b)));
    }
  }
}

TEST(DividedMul, RingAxioms) {
  for (std::uint32_t p : {2u, 3u}) {
    const Env e(p);
    gen::Rng rng(100 + p);
    for (int k = 0; k < 200; ++k) {
      const auto f = gen::random_divided(e.R, rng, 32, 3), g = gen::random_divided(e.R, rng, 32, 3),
                 h = gen::random_divided(e.R, rng, 32, 3);
      const auto& D = e.D;
      ASSERT_EQ(D.mul(f, g), D.mul(g, f));
      ASSERT_EQ(D.mul(D.mul(f, g), h), D.mul(f, D.mul(g, h)));
      ASSERT_EQ(D.mul(f, D.add(g, h)), D.add(D.mul(f, g), D.mul(f, h)));
      ASSERT_EQ(D.mul(D.unit(32), f), f);
      ASSERT_EQ(D.add(f, D.neg(f)), D.zero(32));
    }
  }
}

TEST(DividedMul, RespectsFiltration) {
  const Env e(3);
  gen::Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    auto f = gen::random_divided(e.R, rng, 32, 2), g = gen::random_divided(e.R, rng, 32, 2);
    std::uniform_int_distribution<std::size_t> cut(0, 12);
    const std::size_t a = cut(rng), b = cut(rng);
    std::erase_if(f.coeffs, [&](const auto& kv) { return kv.first < a; });
    std::erase_if(g.coeffs, [&](const auto& kv) { return kv.first < b; });
    const auto prod = e.D.mul(f, g);
    if (auto low = e.D.lowest_index(prod)) EXPECT_GE(*low, a + b);
  }
}

TEST(DividedInverse, Examples) {
  const Env e2(2);
  EXPECT_EQ(e2.D.inverse(e2.D.unit(5)), e2.D.unit(5));
  // Over F_2, 1 + x D_1 squares to 1, so it is its own inverse.
  const auto f = e2.elem(4, {{0, "1"}, {1, "x"}});
  EXPECT_EQ(e2.D.inverse(f), f);
  EXPECT_EQ(e2.D.mul(f, f), e2.D.unit(4));
  EXPECT_THROW(e2.D.inverse(e2.elem(4, {{0, "x"}})), std::invalid_argument);
  EXPECT_THROW(e2.D.inverse(e2.D.zero(4)), std::invalid_argument);
}

TEST(DividedInverse, MatchesPowerAndIsTwoSided) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Env e(p);
    gen::Rng rng(40 + p);
    for (int k = 0; k < 40; ++k) {
      const auto f = gen::random_unit_divided(e.R, rng, 64, 2, 0.3);
      const auto inv = e.D.inverse(f);
      ASSERT_EQ(e.D.mul(f, inv), e.D.unit(64));
      ASSERT_EQ(inv, e.D.pow(f, p - 1));
      ASSERT_EQ(e.D.pow(f, p), e.D.unit(64));
    }
  }
}

TEST(DividedPow, Examples) {
  const Env e2(2), e3(3);
  gen::Rng rng(1);
  const auto f = gen::random_unit_divided(e2.R, rng, 16, 3);
  EXPECT_EQ(e2.D.pow(f, 2), e2.D.unit(16));
  EXPECT_EQ(e2.D.pow(f, 1), f);
  EXPECT_EQ(e2.D.pow(f, 0), e2.D.unit(16));
  const auto g = e3.elem(9, {{0, "1"}, {1, "x"}});
  EXPECT_EQ(e3.D.mul(e3.D.mul(g, g), g), e3.D.unit(9));
  EXPECT_EQ(e3.D.pow(g, 3), e3.D.unit(9));
}

TEST(DividedApply, Examples) {
  const Env e2(2), e3(3);
  EXPECT_EQ(dp_apply(e3.R, 1, e3.poly("x^2")), e3.poly("2*x"));
  const auto f = e3.poly("x^4 + 2*x + 1");
  EXPECT_EQ(dp_apply(e3.R, 0, f), f);
  EXPECT_EQ(dp_apply(e2.R, 2, e2.poly("x^5")), e2.R.zero());
  EXPECT_EQ(dp_apply(e2.R, 7, e2.poly("x^5")), e2.R.zero());
}

TEST(DividedApply, LinearAndComposes) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Env e(p);
    const oracle::BigPascal pascal(64);
    gen::Rng rng(p);
    for (int k = 0; k < 100; ++k) {
      const auto f = e.R.random(rng, 20), g = e.R.random(rng, 20);
      std::uniform_int_distribution<std::size_t> idx(0, 10);
      const std::size_t i = idx(rng), j = idx(rng);
      ASSERT_EQ(dp_apply(e.R, i, e.R.add(f, g)), e.R.add(dp_apply(e.R, i, f), dp_apply(e.R, i, g)));
      const auto lhs = dp_apply(e.R, i, dp_apply(e.R, j, f));
      const auto rhs = e.R.scale(e.R.base().from_int(pascal.mod(i + j, i, p)), dp_apply(e.R, i + j, f));
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(DividedEquality, ComparesCommonWindow) {
  const Env e(2);
  const auto a = e.elem(4, {{0, "1"}, {1, "x"}});
  const auto b = e.elem(8, {{0, "1"}, {1, "x"}, {5, "x^3"}});
  EXPECT_EQ(a, b);
  const auto cmp = e.D.compare(a, b);
  EXPECT_TRUE(cmp.equal);
  EXPECT_EQ(cmp.window, 4u);
  const auto c = e.elem(8, {{0, "1"}, {2, "x"}});
  EXPECT_NE(b, c);
  EXPECT_EQ(e.D.compare(b, c).first_difference, std::optional<std::size_t>{1});
}

TEST(DividedText, RoundTrip) {
  gen::Rng rng(77);
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    const Env e(q);
    for (int k = 0; k < 30; ++k) {
      const auto f = gen::random_divided(e.R, rng, 20, 4);
      const std::string text = e.D.format(f);
      const auto g = e.D.parse(text);
      EXPECT_EQ(g.trunc, f.trunc);
      EXPECT_EQ(g.coeffs, f.coeffs);
      EXPECT_EQ(e.D.format(g), text);
    }
  }
}

TEST(DividedText, FormatAndErrors) {
  const Env e(2);
  EXPECT_EQ(e.D.format(e.elem(4, {{0, "1"}, {1, "x^2+x"}})), "trunc=4 ring=F_2[x]\n0: 1\n1: x^2 + x\n");
  EXPECT_THROW(e.D.parse("trunc=4 ring=F_3[x]\n0: 1\n"), ParseError);
  EXPECT_THROW(e.D.parse("trunc=4 ring=F_2[x]\n5: 1\n"), ParseError);
  EXPECT_THROW(e.D.parse("trunc=4 ring=F_2[x]\n1 x\n"), ParseError);
  EXPECT_THROW(e.D.parse("trunc=0 ring=F_2[x]\n"), ParseError);
  EXPECT_THROW(e.D.parse("ring=F_2[x]\n"), ParseError);
  EXPECT_THROW(e.D.parse("trunc=4 ring=F_2[x]\n1: x\n1: x\n"), ParseError);
}
