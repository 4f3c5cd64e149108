#include <benchmark/benchmark.h>
#include <qsym/qsym.hpp>

using namespace qsym;

static void BM_BuildScd(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_scd(w, h));
}
BENCHMARK(BM_BuildScd)->Args({3, 8})->Args({3, 12})->Args({4, 6})->Args({4, 10})->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const auto d = build_scd(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(d));
}
BENCHMARK(BM_Certify)->Args({3, 12})->Args({4, 10})->Unit(benchmark::kMillisecond);
