#include "strata/divisors.hpp"
#include "strata/porteous.hpp"

#include <benchmark/benchmark.h>

using namespace strata;

static GradedPoly dense_series(int cap) {
  GradedPoly p = GradedPoly::constant(1, cap);
  for (int i = 1; i <= cap; ++i) {
    p.add_term(Monomial::generator(lambda_gen(i)), rational(1, i));
    p.add_term(Monomial::generator(omega_gen(1), i), rational(i, i + 1));
  }
  return mul(p, p);
}

static void BM_Mul(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  GradedPoly a = dense_series(cap), b = dense_series(cap);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(6)->Arg(8);

static void BM_SeriesInverse(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  GradedPoly f = dense_series(cap);
  f.add_term(Monomial{}, Rational(1) - f.constant_term());
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(f));
}
BENCHMARK(BM_SeriesInverse)->Arg(4)->Arg(6)->Arg(8);

static void BM_StratumClass(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  Partition mu = with_ones(Partition{2}, 2 * g - 4);
  for (auto _ : state) benchmark::DoNotOptimize(stratum_class(g, mu));
}
BENCHMARK(BM_StratumClass)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

static void BM_LambdaIdentity(benchmark::State& state) {
  for (auto _ : state) {
    bool ok = true;
    for (int g = 2; g <= 50; ++g) ok = ok && lambda_identity_check(g);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_LambdaIdentity);

BENCHMARK_MAIN();
