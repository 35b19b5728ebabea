#include <benchmark/benchmark.h>

#include "qhcp/floer.hpp"
#include "qhcp/lattice.hpp"
#include "qhcp/screening.hpp"

namespace {

void BM_DLensAll(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qhcp::floer::d_lens_all(p, (p - 1) / 2));
}
// Odd p, so (p - 1) / 2 is coprime to p.
BENCHMARK(BM_DLensAll)->Arg(63)->Arg(257)->Arg(1025);

void BM_EnumerateEmbeddings(benchmark::State& state) {
  const auto lats = qhcp::lattice::parse_graphs("-2,-10,-2;-9");
  const auto rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhcp::lattice::enumerate_embeddings(lats, rank));
}
BENCHMARK(BM_EnumerateEmbeddings)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto index = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhcp::screening::classify(index));
}
BENCHMARK(BM_Classify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
