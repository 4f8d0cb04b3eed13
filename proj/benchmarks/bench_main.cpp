#include <benchmark/benchmark.h>

#include "rootnum/combinatorics.hpp"
#include "rootnum/epsilon_transfer.hpp"
#include "rootnum/local_field.hpp"
#include "rootnum/oldforms.hpp"
#include "rootnum/quad_ring.hpp"

using namespace rootnum;

namespace {

void BM_PhiImage(benchmark::State& state) {
  auto R = TruncatedQuadRing::build(preset("inert5"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(norm_one_image_phi(R, 0));
  state.counters["ring"] = static_cast<double>(R.size());
}
BENCHMARK(BM_PhiImage)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_NaiveNormOne(benchmark::State& state) {
  auto R = TruncatedQuadRing::build(preset("inert5"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(naive_norm_one_units(R));
}
BENCHMARK(BM_NaiveNormOne)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_FixedPoints(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(involution_fixed_points(TraceCase::self_dual, N, 12));
}
BENCHMARK(BM_FixedPoints)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ScheduleSolve(benchmark::State& state) {
  int K = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(coefficient_schedule(TraceCase::conj_nonsplit, 11, K));
}
BENCHMARK(BM_ScheduleSolve)->RangeMultiplier(2)->Range(8, 128);

void BM_WitnessSearch(benchmark::State& state) {
  auto R = TruncatedQuadRing::build(preset("tame5"), 2);
  auto units = norm_one_units(R);
  for (auto _ : state)
    for (auto idx : units) benchmark::DoNotOptimize(matrix_witness_search(R, 3, R.elem(idx)));
}
BENCHMARK(BM_WitnessSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
