#include <benchmark/benchmark.h>

#include "qelim/qelim.hpp"

namespace {

using namespace qelim;

void BM_MaxInfluenceTribes(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto f = tribes(s, 2);
  const auto mu = ProductDistribution::uniform(2 * s, 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_influence(f, mu));
}
BENCHMARK(BM_MaxInfluenceTribes)->Arg(2)->Arg(4)->Arg(6);

void BM_OptimalErrorTribes(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto f = perturb_tribes(tribes(s, 2), Rat(1, 4));
  const auto mu = ProductDistribution::uniform(2 * s, 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_error(f, mu, s));
}
BENCHMARK(BM_OptimalErrorTribes)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FullEliminate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = parity(n);
  const auto mu = ProductDistribution::bernoulli(n, Rat(1, 3));
  const auto t = optimal_tree(f, mu, n);
  for (auto _ : state) benchmark::DoNotOptimize(full_eliminate(t, f, mu, Rat(0)));
}
BENCHMARK(BM_FullEliminate)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
