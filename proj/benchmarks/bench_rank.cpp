#include <benchmark/benchmark.h>

#include "ringrank/rank.hpp"
#include "ringrank/regularity.hpp"
#include "ringrank/reproduce.hpp"

using namespace ringrank;

namespace {

void BM_RightRankAllElements(benchmark::State& state, RankMethod method) {
  const Algebra m3 = make_full_matrix_algebra(3, Field::prime(2));
  for (auto _ : state) {
    RankEngine engine(m3, RankOptions{{}, method, false});
    std::size_t total = 0;
    for_each_element(m3, [&](const Element& a) {
      const RankValue r = engine.right_rank(a);
      total += r.is_finite() ? r.value() : 0;
      return true;
    });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK_CAPTURE(BM_RightRankAllElements, sum_search, RankMethod::sum_search)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RightRankAllElements, composition_length, RankMethod::composition_length)
    ->Unit(benchmark::kMillisecond);

void BM_MinimalRightIdeals(benchmark::State& state) {
  const Algebra b = make_block_example_algebra({1, 2}, Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_right_ideals(b).size());
}
BENCHMARK(BM_MinimalRightIdeals)->Unit(benchmark::kMillisecond);

void BM_RadicalScan(benchmark::State& state) {
  const Algebra t3 = make_triangular_algebra(3, Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(radical_by_quasi_regularity(t3).dim());
}
BENCHMARK(BM_RadicalScan)->Unit(benchmark::kMillisecond);

void BM_UnitRegularWitness(benchmark::State& state) {
  const Algebra m3 = make_full_matrix_algebra(3, Field::prime(2));
  RankEngine engine(m3);
  const Element a = m3.named("E11") + m3.named("E12") + m3.named("E23");
  for (auto _ : state) benchmark::DoNotOptimize(unit_regular_witness(engine, a).witness.has_value());
}
BENCHMARK(BM_UnitRegularWitness)->Unit(benchmark::kMicrosecond);

void BM_BlockExampleFastPath(benchmark::State& state) {
  ReproduceOptions opts;
  opts.m = static_cast<std::size_t>(state.range(0));
  opts.n = static_cast<std::size_t>(state.range(1));
  opts.fastpath = true;
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_block_example(opts).all_match());
}
BENCHMARK(BM_BlockExampleFastPath)->Args({1, 2})->Args({2, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
