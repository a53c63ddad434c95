#include <benchmark/benchmark.h>

#include "kschur/bases.hpp"
#include "kschur/demazure.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/oracles.hpp"

using namespace kschur;

namespace {

// Size-m partitions indexed by position in enumeration order.
Partition nth_partition(int m, int i) {
  const auto all = enumerate_partitions(m);
  return all[static_cast<std::size_t>(i) % all.size()];
}

void BM_CatalanFullIdeal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Partition lambda = nth_partition(m, static_cast<int>(enumerate_partitions(m).size()) - 1);
  const RootIdeal psi = RootIdeal::full(m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(catalan_char(psi, lambda, m + 1));
  state.SetLabel("lambda=(" + lambda.to_string() + ")");
}
BENCHMARK(BM_CatalanFullIdeal)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_CatalanKSchurIdeal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = 2;
  const Partition lambda = enumerate_kbounded(m, k).front();
  const RootIdeal psi = kschur_ideal(lambda, k, m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(catalan_char(psi, lambda, m + 1));
  state.SetLabel("lambda=(" + lambda.to_string() + ") k=2");
}
BENCHMARK(BM_CatalanKSchurIdeal)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_SevenSchurExample(benchmark::State& state) {
  const Partition lambda{6, 5, 5, 3, 1, 1};
  const RootIdeal psi = kschur_ideal(lambda, 7, 6);
  for (auto _ : state) benchmark::DoNotOptimize(catalan_char(psi, lambda, 6));
}
BENCHMARK(BM_SevenSchurExample)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RaisingSeriesOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Partition lambda = enumerate_partitions(m).back();
  const RootIdeal psi = RootIdeal::full(m);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::raising_series_catalan(psi, lambda, m, n_stat(conjugate(lambda))));
}
BENCHMARK(BM_RaisingSeriesOracle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_KostkaCharge(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto all = enumerate_partitions(m);
  for (auto _ : state)
    for (const auto& lambda : all) benchmark::DoNotOptimize(oracle::kostka_charge(lambda, all.back()));
}
BENCHMARK(BM_KostkaCharge)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ModifiedMacdonald(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  const Partition mu = nth_partition(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(modified_macdonald(mu, m, jobs));
  state.SetLabel("mu=(" + mu.to_string() + ")");
}
BENCHMARK(BM_ModifiedMacdonald)->ArgsProduct({{4, 5, 6}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_KSchurExpandHallLittlewood(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Partition lambda = enumerate_kbounded(m, 2).front();
  const SchurExpansion hl = hall_littlewood(lambda, m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(kschur_expand(hl, 2));
}
BENCHMARK(BM_KSchurExpandHallLittlewood)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
