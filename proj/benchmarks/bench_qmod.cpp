#include <benchmark/benchmark.h>

#include "qmod/appell.hpp"
#include "qmod/mlde.hpp"
#include "qmod/modforms.hpp"
#include "qmod/vachar.hpp"

using namespace qmod;

static void BM_Multiply(benchmark::State& state) {
  Rational n(state.range(0));
  Series a = eta(Rational(1), n);
  Series b = eisenstein(4, n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Multiply)->Arg(50)->Arg(200)->Arg(800);

static void BM_Invert(benchmark::State& state) {
  Rational n(state.range(0));
  Series a = product_expand(Rational(1), Rational(1), 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_Invert)->Arg(50)->Arg(200)->Arg(800);

static void BM_CpChar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cp_char(state.range(0), Rational(30)));
}
BENCHMARK(BM_CpChar)->DenseRange(2, 6);

static void BM_AnClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(an_series(state.range(0), AnMethod::Closed, Rational(15)));
}
BENCHMARK(BM_AnClosed)->DenseRange(2, 6);

static void BM_AnAppell(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(an_series(state.range(0), AnMethod::Appell, Rational(15)));
}
BENCHMARK(BM_AnAppell)->DenseRange(2, 6);

static void BM_DecompositionSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_sum(3, Rational(state.range(0))));
}
BENCHMARK(BM_DecompositionSum)->Arg(25)->Arg(50);

static void BM_MldeVerify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_builtin(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MldeVerify)->DenseRange(2, 3);

BENCHMARK_MAIN();
