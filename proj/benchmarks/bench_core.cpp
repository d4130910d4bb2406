#include <benchmark/benchmark.h>

#include "hopfit/congruence.hpp"
#include "hopfit/properties.hpp"
#include "hopfit/suite.hpp"

namespace {

using namespace hopfit;

void BM_EnumerateCongruences(benchmark::State& state) {
  const FiniteAct a = null_act(trivial_monoid(), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_congruences(a, 8));
  }
}
BENCHMARK(BM_EnumerateCongruences)->Arg(5)->Arg(6)->Arg(7);

void BM_EnumerateEndomorphisms(benchmark::State& state) {
  const FiniteAct a = null_act(trivial_monoid(), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_endomorphisms(a, 8));
  }
}
BENCHMARK(BM_EnumerateEndomorphisms)->Arg(4)->Arg(5)->Arg(6);

void BM_JoinClosure(benchmark::State& state) {
  const FiniteAct a = null_act(trivial_monoid(), 8);
  const Congruence r = generated_by(a, {{0, 1}, {2, 3}, {4, 5}});
  const Congruence s = generated_by(a, {{1, 2}, {3, 4}, {5, 6}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(join(r, s));
  }
}
BENCHMARK(BM_JoinClosure);

void BM_MonoidCensus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_monoids(state.range(0)));
  }
}
BENCHMARK(BM_MonoidCensus)->Arg(3)->Arg(4);

void BM_ActCensus(benchmark::State& state) {
  const MonoidPtr t2 = t2_monoid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_acts(t2, state.range(0)));
  }
}
BENCHMARK(BM_ActCensus)->Arg(3)->Arg(4)->Arg(5);

void BM_FittingVerdict(benchmark::State& state) {
  const FiniteAct a = null_act(trivial_monoid(), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_fitting(a));
  }
}
BENCHMARK(BM_FittingVerdict)->Arg(3)->Arg(4);

void BM_CatalogSuite(benchmark::State& state) {
  CensusScope scope;
  scope.catalog_only = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(scope));
  }
}
BENCHMARK(BM_CatalogSuite);

}  // namespace

BENCHMARK_MAIN();
