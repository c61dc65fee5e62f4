#include <benchmark/benchmark.h>

#include "semihom/contact.hpp"
#include "semihom/oracle.hpp"
#include "semihom/resolution.hpp"
#include "semihom/spectral.hpp"

using namespace semihom;

static void BM_BuildResolution(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_minimal_resolution(3, 4, m));
  state.SetComplexityN(m);
}
BENCHMARK(BM_BuildResolution)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_ContactCohomology(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(contact_cohomology(4, 3, m));
}
BENCHMARK(BM_ContactCohomology)->Arg(6)->Arg(60)->Arg(600);

static void BM_ComparePages(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compare_pages(5, 4, state.range(0)));
}
BENCHMARK(BM_ComparePages)->Arg(10)->Arg(100);

static void BM_CountContactJets(benchmark::State& state) {
  const SparseIntPoly f = fermat(3, 2);
  const auto m = state.range(0);
  const auto p = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_contact_jets(f, m, p));
}
BENCHMARK(BM_CountContactJets)
    ->Args({2, 5})
    ->Args({3, 5})
    ->Args({4, 3})
    ->Args({4, 7})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

static void BM_ScatterGrid(benchmark::State& state) {
  const auto hi = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(scatter_grid(3, hi, 2, hi));
}
BENCHMARK(BM_ScatterGrid)->Arg(40)->Arg(200);

static void BM_ClassifyPair(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_pair(state.range(0), state.range(0) + 1));
}
BENCHMARK(BM_ClassifyPair)->Arg(10)->Arg(1000);

BENCHMARK_MAIN();
