#include <random>

#include <benchmark/benchmark.h>

#include "sftglue/sftglue.hpp"

namespace {

using namespace sftglue;

SftGraph path4() { return SftGraph({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}); }
SftGraph golden_mean() { return SftGraph({{1, 1}, {1, 0}}); }

void BM_MatrixPower(benchmark::State& state) {
  const auto g = SftGraph::full_shift(4);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_power(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MatrixPower)->Arg(8)->Arg(64)->Arg(512);

void BM_IsMixing(benchmark::State& state) {
  const auto g = path4();
  for (auto _ : state) benchmark::DoNotOptimize(is_mixing(g));
}
BENCHMARK(BM_IsMixing);

void BM_ConstructTrace(benchmark::State& state) {
  const auto g = golden_mean();
  std::mt19937_64 rng(1);
  std::vector<OrbitBlock> blocks;
  for (int j = 0; j < state.range(0); ++j) {
    const Word w{static_cast<Symbol>(rng() % 2)};
    blocks.push_back({point_of(g, w), static_cast<std::int64_t>(rng() % 7)});
  }
  const OrbitSequence c(std::move(blocks));
  for (auto _ : state) benchmark::DoNotOptimize(construct_trace(g, c, Resolution(3)));
}
BENCHMARK(BM_ConstructTrace)->Arg(2)->Arg(8)->Arg(32);

void BM_RefuteHyperGluing(benchmark::State& state) {
  const auto g = state.range(0) == 0 ? path4() : golden_mean();
  for (auto _ : state)
    benchmark::DoNotOptimize(refute_hyper_gluing(g, Resolution(1), state.range(1), 2));
}
BENCHMARK(BM_RefuteHyperGluing)->Args({0, 2})->Args({0, 4})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_Entropy(benchmark::State& state) {
  const auto g = path4();
  for (auto _ : state) benchmark::DoNotOptimize(entropy(g, 20));
}
BENCHMARK(BM_Entropy);

}  // namespace
BENCHMARK_MAIN();
