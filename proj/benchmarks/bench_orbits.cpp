#include <benchmark/benchmark.h>

#include "ancas/reps.hpp"

using namespace ancas;

namespace {

void BM_OrbitEnumeration(benchmark::State& state) {
  // rank 7, generic-ish weight: 1680 elements
  LambdaWeight w({1, 0, 1, 0, 0, 1, 0});
  Orbit orbit(w);
  for (auto _ : state) {
    long count = 0;
    orbit.for_each([&](std::span<const int>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * 1680);
}
BENCHMARK(BM_OrbitEnumeration);

void BM_ChFormula(benchmark::State& state) {
  LambdaWeight w({2, 0, 1, 0, 0, 1, 0});
  int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SymExpr e = ch_orbit(w, s, ChMethod::formula);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_ChFormula)->Arg(4)->Arg(7);

void BM_ChBruteforce(benchmark::State& state) {
  LambdaWeight w({2, 0, 1, 0, 0, 1, 0});  // orbit size 10080
  int s = 7;
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SymExpr e = ch_orbit(w, s, ChMethod::bruteforce, jobs);
    benchmark::DoNotOptimize(e);
  }
  state.SetItemsProcessed(state.iterations() * 10080);
}
BENCHMARK(BM_ChBruteforce)->Arg(1)->Arg(4);

void BM_CofRep(benchmark::State& state) {
  LambdaWeight w({1, 0, 0, 0, 0, 1});  // rank-6 adjoint
  for (auto _ : state) {
    CofVector c = cof_rep(w, 6);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CofRep);

} // namespace

BENCHMARK_MAIN();
