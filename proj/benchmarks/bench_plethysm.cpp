#include <benchmark/benchmark.h>
#include <qsym/qsym.hpp>

using namespace qsym;

static void BM_CountStot(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_stot(Partition{2, 1}, Partition{b}));
}
BENCHMARK(BM_CountStot)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_PlethysmSchur(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plethysm_schur(Partition{3}, Partition{b}));
}
BENCHMARK(BM_PlethysmSchur)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_LeadingTerm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(leading_term(Partition{4, 3, 1}, Partition{5, 2, 2}));
}
BENCHMARK(BM_LeadingTerm);

static void BM_TwoVariable(benchmark::State& state) {
  const auto method = static_cast<TwoVarMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(two_var_plethysm(4, 12, method));
}
BENCHMARK(BM_TwoVariable)
    ->Arg(static_cast<int>(TwoVarMethod::formula))
    ->Arg(static_cast<int>(TwoVarMethod::scd))
    ->Arg(static_cast<int>(TwoVarMethod::oracle));
