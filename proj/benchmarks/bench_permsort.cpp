#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "permsort/analysis.hpp"
#include "permsort/patterns.hpp"
#include "permsort/tree.hpp"

using permsort::Permutation;

namespace {

Permutation random_permutation(int n, unsigned seed) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

void BM_Contains(benchmark::State& state) {
  const auto text = random_permutation(static_cast<int>(state.range(0)), 1);
  const Permutation pattern{2, 4, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(permsort::contains(text, pattern));
}
BENCHMARK(BM_Contains)->RangeMultiplier(2)->Range(8, 64);

void BM_ApplyS(benchmark::State& state) {
  const auto p = random_permutation(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(permsort::apply_S(p));
}
BENCHMARK(BM_ApplyS)->RangeMultiplier(4)->Range(16, 4096);

void BM_PreimagesS(benchmark::State& state) {
  // Post-orders of random trees always have preimages.
  const auto tau = permsort::apply_S(random_permutation(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(permsort::preimages_S(tau));
}
BENCHMARK(BM_PreimagesS)->DenseRange(8, 14, 2);

void BM_SortedSet(benchmark::State& state) {
  const auto op = permsort::OperatorExpr::parse("SRS");
  for (auto _ : state) {
    benchmark::DoNotOptimize(permsort::sorted_set(op, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_SortedSet)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
