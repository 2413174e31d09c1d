#include <benchmark/benchmark.h>

#include <random>

#include "kuforge/f2matrix.hpp"
#include "kuforge/groupring.hpp"
#include "kuforge/intmatrix.hpp"
#include "kuforge/localcoh.hpp"
#include "kuforge/milnor.hpp"
#include "kuforge/ss.hpp"

using namespace kuforge;

static void BM_F2Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  exactla::F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1U);
  for (auto _ : state) benchmark::DoNotOptimize(exactla::f2_rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_F2Rank)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNCubed);

static void BM_SmithDiagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  exactla::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(rng() % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(exactla::smith_diagonal(m));
}
BENCHMARK(BM_SmithDiagonal)->Arg(8)->Arg(16)->Arg(32);

static void BM_QiHomology(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(milnor::qi_homology_dim(1, r, n));
}
BENCHMARK(BM_QiHomology)->Args({3, 16})->Args({4, 16})->Args({4, 24});

static void BM_LfrakDim(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(milnor::lfrak_dim(r, 2, 12));
}
BENCHMARK(BM_LfrakDim)->DenseRange(2, 4);

static void BM_RnGroup(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(groupring::rn_group(r, n));
}
BENCHMARK(BM_RnGroup)->Args({2, 6})->Args({3, 6})->Args({4, 4});

static void BM_CechLfrak(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto pres = localcoh::lfrak_presentation(r, 1);
  for (auto _ : state) benchmark::DoNotOptimize(localcoh::cech_local_cohomology(pres, -12, 12));
}
BENCHMARK(BM_CechLfrak)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ResolutionLfrak(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto pres = localcoh::lfrak_presentation(r, 1);
  for (auto _ : state) benchmark::DoNotOptimize(localcoh::resolution_local_cohomology(pres, -12, 12));
}
BENCHMARK(BM_ResolutionLfrak)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_KuSpectralSequence(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ss::ku_spectral_sequence(r, 10));
}
BENCHMARK(BM_KuSpectralSequence)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
