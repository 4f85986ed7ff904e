#include <benchmark/benchmark.h>

#include "qhomfly/invariants.hpp"
#include "qhomfly/pbw.hpp"
#include "qhomfly/qcomb.hpp"
#include "qhomfly/qholo.hpp"

namespace {

using namespace qhomfly;

const Braid kTrefoil{2, {1, 1, 1}};

void BM_Qbinom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qbinom(n, n / 2));
}
BENCHMARK(BM_Qbinom)->Arg(8)->Arg(16)->Arg(32);

void BM_TrefoilColumns(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(w_columns(make_colored(kTrefoil, {a})));
}
BENCHMARK(BM_TrefoilColumns)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// memo on versus off over the same term list
void BM_TrefoilTerms(benchmark::State& state) {
  const auto terms = enumerate_terms(make_colored(kTrefoil, {2}));
  EvalOptions opt;
  opt.memo = state.range(0) != 0;
  for (auto _ : state) {
    Evaluator e(2, opt);
    for (const auto& t : terms) e.accumulate(t);
    benchmark::DoNotOptimize(e.total());
  }
  state.counters["terms"] = static_cast<double>(terms.size());
}
BENCHMARK(BM_TrefoilTerms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorusRows(benchmark::State& state) {
  const Braid b{2, std::vector<int>(5, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(w_rows(make_colored(b, {2})));
}
BENCHMARK(BM_TorusRows)->Unit(benchmark::kMillisecond);

void BM_GuessUnknot(benchmark::State& state) {
  Sequence f;
  for (int a = 0; a <= 8; ++a) f.values.push_back(xbinom(0, a));
  for (auto _ : state) benchmark::DoNotOptimize(guess(f, 1, 2));
}
BENCHMARK(BM_GuessUnknot)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
