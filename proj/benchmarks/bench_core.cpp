#include <benchmark/benchmark.h>

#include <random>

#include "lucas/binomial_seq.hpp"
#include "lucas/carlitz.hpp"
#include "lucas/carlitz_module.hpp"
#include "lucas/explorer.hpp"

namespace {

using namespace lucas;

PolyFq ring_of(std::uint32_t q) { return PolyFq(FiniteField::of_order(q), "x"); }

DividedElem<Poly<Fq>> random_unit(const PolyFq& R, std::mt19937_64& rng, std::size_t trunc) {
  std::map<std::size_t, Poly<Fq>> c{{0, R.one()}};
  for (std::size_t i = 1; i < trunc; ++i) c.emplace(i, R.random(rng, 4));
  return DividedRing<PolyFq>(R).make(trunc, std::move(c));
}

LinearSeq<Fq> linear_seq(const PolyFq& R, std::uint64_t q, std::size_t N) {
  LinearSeq<Fq> e{q, {}};
  std::uint64_t shift = 1;
  for (std::uint64_t pos = 1; pos < N; pos *= q, shift *= q) e.entries.push_back(R.add(R.variable(), R.monomial(R.base().one(), q * shift)));
  return e;
}

void BM_DividedMul(benchmark::State& state) {
  const auto R = ring_of(static_cast<std::uint32_t>(state.range(1)));
  const DividedRing<PolyFq> D(R);
  std::mt19937_64 rng(1);
  const auto trunc = static_cast<std::size_t>(state.range(0));
  const auto f = random_unit(R, rng, trunc), g = random_unit(R, rng, trunc);
  for (auto _ : state) benchmark::DoNotOptimize(D.mul(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DividedMul)->ArgsProduct({{16, 32, 64, 128}, {2, 4, 9}})->Complexity();

void BM_DividedInverse(benchmark::State& state) {
  const auto R = ring_of(3);
  const DividedRing<PolyFq> D(R);
  std::mt19937_64 rng(2);
  const auto f = random_unit(R, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(D.inverse(f));
}
BENCHMARK(BM_DividedInverse)->RangeMultiplier(2)->Range(16, 128);

void BM_CheckBinomial(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(1));
  const auto R = ring_of(static_cast<std::uint32_t>(q));
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto seq = carlitz_sequence(R, linear_seq(R, q, N), N);
  for (auto _ : state) benchmark::DoNotOptimize(check_binomial(R, seq));
}
BENCHMARK(BM_CheckBinomial)->ArgsProduct({{8, 16, 27}, {2, 3}});

void BM_CheckMultiplicative(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(1));
  const auto R = ring_of(static_cast<std::uint32_t>(q));
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto f = gen_function(R, carlitz_sequence(R, linear_seq(R, q, N), N));
  for (auto _ : state) benchmark::DoNotOptimize(check_multiplicative(R, f));
}
BENCHMARK(BM_CheckMultiplicative)->ArgsProduct({{8, 16, 27}, {2, 3}});

void BM_Dirac(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const CarlitzCtx ctx = CarlitzCtx::for_truncation(FiniteField(2), N);
  const auto alpha = ctx.A().monomial(ctx.A().base().one(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(dirac(ctx, alpha, N));
}
BENCHMARK(BM_Dirac)->Arg(8)->Arg(16)->Arg(32);

void BM_Enumerate(benchmark::State& state) {
  const EnumerateOptions opt{2, static_cast<std::size_t>(state.range(0)), 4, 100000,
                             static_cast<unsigned>(state.range(1))};
  std::size_t found = 0;
  for (auto _ : state) found = enumerate(opt).sequences.size();
  state.counters["sequences"] = static_cast<double>(found);
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{6, 8}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
