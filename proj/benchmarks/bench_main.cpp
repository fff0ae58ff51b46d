#include <benchmark/benchmark.h>

#include <random>

#include "dissoc/canonical.hpp"
#include "dissoc/dissociation.hpp"
#include "dissoc/kpath.hpp"
#include "dissoc/structure.hpp"
#include "dissoc/treegen.hpp"

using namespace dissoc;

namespace {

Forest random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return pruefer_decode(seq);
}

void BM_CountDp(benchmark::State& state) {
  const Forest t = random_tree(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(alpha3_count_dp(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountDp)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oN);

void BM_CountDpFixed(benchmark::State& state) {
  const Forest t = random_tree(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(alpha3_count_dp_fixed(t).alpha3);
}
BENCHMARK(BM_CountDpFixed)->Arg(64)->Arg(256);

void BM_FreeTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    FreeTreeGenerator g(n);
    std::size_t count = 0;
    while (g.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_FreeTrees)->DenseRange(12, 16, 2);

void BM_CanonicalCode(benchmark::State& state) {
  const Forest t = random_tree(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(t));
}
BENCHMARK(BM_CanonicalCode)->RangeMultiplier(4)->Range(64, 1 << 14);

void BM_GreedyCover(benchmark::State& state) {
  const Forest t = random_tree(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_cover_matching(t, 3).cover.size());
}
BENCHMARK(BM_GreedyCover)->RangeMultiplier(4)->Range(64, 4096);

void BM_CriticalEdges(benchmark::State& state) {
  const Forest t = random_tree(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(critical_edges_alpha3(t));
}
BENCHMARK(BM_CriticalEdges)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace
BENCHMARK_MAIN();
