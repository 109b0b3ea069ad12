#include <benchmark/benchmark.h>

#include <cstdlib>

#include "sur/constructions.hpp"
#include "sur/cover.hpp"
#include "sur/enumerate.hpp"
#include "sur/exact.hpp"
#include "sur/random.hpp"
#include "sur/randomized.hpp"
#include "sur/verify.hpp"

namespace {

using namespace sur;

void BM_VerifyStar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto family = star(n);
  const auto all = enumerate_nontrivial_bicolorings(n);
  for (auto _ : state) {
    auto cert = verify_sur(family, all);
    benchmark::DoNotOptimize(cert);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(all.size()));
}
BENCHMARK(BM_VerifyStar)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GreedyCover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto family = greedy_cover(n, n / 2, n / 2);
    benchmark::DoNotOptimize(family);
  }
}
BENCHMARK(BM_GreedyCover)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_OptimalAllNontrivial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto all = enumerate_nontrivial_bicolorings(n);
  for (auto _ : state) {
    auto res = optimal_sur(all, SearchConfig::all_even());
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_OptimalAllNontrivial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BicoloringFamily bounded(std::size_t n, std::size_t d, std::size_t m) {
  Rng rng(7);
  std::vector<Bicoloring> items;
  while (items.size() < m) {
    std::vector<int> colors(n);
    for (auto& c : colors) c = (rng.next() >> 63) != 0 ? 1 : -1;
    auto b = Bicoloring::from_colors(colors);
    if (!b.is_trivial() && static_cast<std::size_t>(std::llabs(b.imbalance())) <= d) items.push_back(b);
  }
  return BicoloringFamily(n, std::move(items));
}

void BM_BiasedSur(benchmark::State& state) {
  const auto family = bounded(200, 20, 1000);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto res = biased_sur(family, 16, 20, ++seed);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BiasedSur)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
