#include <benchmark/benchmark.h>

#include "hplus/dims.hpp"
#include "hplus/fusion.hpp"
#include "hplus/linmaps.hpp"
#include "hplus/ncpart.hpp"

using namespace hplus;

static void BM_FuseBasis(benchmark::State& state) {
  auto g = Group::cyclic(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  Word x;
  for (std::size_t i = 0; i < n; ++i) x.letters.push_back(g.parse_element(std::to_string(i % 3)));
  // every split cancels, so this is the widest product for the length
  const Word y = involute(g, x);
  for (auto _ : state) benchmark::DoNotOptimize(fuse_basis(g, x, y));
}
BENCHMARK(BM_FuseBasis)->DenseRange(2, 12, 2);

static void BM_EnumerateNC(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc(n / 2, n - n / 2));
}
BENCHMARK(BM_EnumerateNC)->DenseRange(4, 10, 2);

static void BM_ExactRankFull(benchmark::State& state) {
  const auto ps = enumerate_nc(0, static_cast<std::size_t>(state.range(0)));
  const auto g = gram_matrix(ps, 5, GramBackend::combinatorial);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(g.entries));
}
BENCHMARK(BM_ExactRankFull)->DenseRange(3, 7);

// N = 2 is rank deficient, so the fraction-free path runs.
static void BM_ExactRankDeficient(benchmark::State& state) {
  const auto ps = enumerate_nc(0, static_cast<std::size_t>(state.range(0)));
  const auto g = gram_matrix(ps, 2, GramBackend::combinatorial);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(g.entries));
}
BENCHMARK(BM_ExactRankDeficient)->DenseRange(3, 6);

static void BM_GramDirect(benchmark::State& state) {
  const auto ps = enumerate_nc(0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(ps, 4, GramBackend::direct));
}
BENCHMARK(BM_GramDirect)->DenseRange(2, 5);

static void BM_DecayProfile(benchmark::State& state) {
  auto g = Group::cyclic(2);
  for (auto _ : state) benchmark::DoNotOptimize(decay_profile(g, 4.0, 5, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_DecayProfile)->Arg(50)->Arg(200)->Arg(1000);
BENCHMARK_MAIN();
