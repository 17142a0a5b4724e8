#include <benchmark/benchmark.h>

#include "chebtl/homology.hpp"

using namespace chebtl;

static void BM_StandardExactness(benchmark::State& state, Exec exec) {
  const ComplexSpec c = standard_resolution(static_cast<int>(state.range(0)));
  const int j_hi = static_cast<int>(state.range(0)) + 4;
  for (auto _ : state) benchmark::DoNotOptimize(verify_exactness(c, 0, j_hi, exec).exact());
}
BENCHMARK_CAPTURE(BM_StandardExactness, serial, Exec::serial)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StandardExactness, parallel, Exec::parallel)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// One graded piece, both kernels, no outer parallel loop.
static void BM_Piece(benchmark::State& state, bool blocked) {
  const int n = static_cast<int>(state.range(0));
  const SparseChainComplex piece = graded_piece(standard_resolution(n), n + 4, true);
  for (auto _ : state)
    benchmark::DoNotOptimize(blocked ? blocked_homology_dims(piece) : dense_homology_dims(piece));
}
BENCHMARK_CAPTURE(BM_Piece, dense, false)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Piece, blocked, true)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_DerivedTruncation(benchmark::State& state, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(derived_truncation(2, static_cast<int>(state.range(0)), 10, exec));
}
BENCHMARK_CAPTURE(BM_DerivedTruncation, serial, Exec::serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DerivedTruncation, parallel, Exec::parallel)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
