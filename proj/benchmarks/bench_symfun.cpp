#include <benchmark/benchmark.h>

#include "ancas/eigenpoly.hpp"
#include "ancas/symfun.hpp"
#include "ancas/verify.hpp"

using namespace ancas;

namespace {

void BM_ReduceOrder7(benchmark::State& state) {
  // includes the memoized fast path; first iteration pays the build
  for (auto _ : state) {
    for (const auto& p : partitions_of(7)) {
      SymExpr e = reduce_to_power(p);
      benchmark::DoNotOptimize(e);
    }
  }
}
BENCHMARK(BM_ReduceOrder7);

void BM_EvalMonomial(benchmark::State& state) {
  Partition p{3, 2, 1, 1};
  std::vector<Rat> vals;
  for (long i = 1; i <= 9; ++i) vals.emplace_back(i, i + 1);
  for (auto& v : vals) v.canonicalize();
  for (auto _ : state) {
    Rat r = eval_monomial(p, vals);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EvalMonomial);

void BM_SchurCheck(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = schur_check(k);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SchurCheck)->Arg(5)->Arg(7);

void BM_VerifyClass(benchmark::State& state) {
  Partition cls{4};
  auto sample = default_sample_weights(5, 8);
  for (auto _ : state) {
    VerificationReport r = verify_class(cls, 5, sample, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyClass);

} // namespace
