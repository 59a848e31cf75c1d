#include <fusscat/bijections.hpp>
#include <fusscat/oracles.hpp>

#include <benchmark/benchmark.h>

using namespace fusscat;

static void BM_Partitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    PartitionEnumerator e(n, m);
    std::size_t count = 0;
    while (e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Partitions)->Args({5, 3})->Args({7, 3});

static void BM_Regions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    RegionEnumerator e(n, m);
    std::size_t count = 0;
    while (e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Regions)->Args({5, 3})->Args({7, 3});

static void BM_Dissections(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  const auto poly = alternating_labeling(n, m);
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_dissection(poly, [&](const Dissection&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Dissections)->Args({4, 3})->Args({5, 3});

static void BM_OmegaRoundTrip(benchmark::State& state) {
  const auto dissections = enumerate_dissections(4, 3, Labeling::Alternating);
  for (auto _ : state)
    for (const auto& d : dissections) benchmark::DoNotOptimize(omega_inverse(omega(d)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dissections.size()));
}
BENCHMARK(BM_OmegaRoundTrip);

static void BM_GridOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracles::stabilized_grid_region_oracle(3, 2));
}
BENCHMARK(BM_GridOracle);
BENCHMARK_MAIN();
