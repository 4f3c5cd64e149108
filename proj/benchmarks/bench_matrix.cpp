#include <benchmark/benchmark.h>
#include <qsym/qsym.hpp>

using namespace qsym;

static void BM_QuasiKostka(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quasi_kostka_matrix(n));
}
BENCHMARK(BM_QuasiKostka)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_InvertUnitriangular(benchmark::State& state) {
  const auto q = quasi_kostka_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_unitriangular(q));
}
BENCHMARK(BM_InvertUnitriangular)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_FToSchur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SymFunc g(n, Basis::s);
  int c = 1;
  for (const auto& lam : partitions_of(n)) g.add_term(lam.parts(), c++ % 7 - 3);
  const SymFunc f = schur_expansion_to_F(g);
  inverse_quasi_kostka(n);
  for (auto _ : state) benchmark::DoNotOptimize(F_to_schur(f));
}
BENCHMARK(BM_FToSchur)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_FToSchurViaChains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymFunc f = schur_to_F(Partition{n - 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(F_to_schur_via_chains(f));
}
BENCHMARK(BM_FToSchurViaChains)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
