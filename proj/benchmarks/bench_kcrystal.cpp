#include <benchmark/benchmark.h>

#include <random>

#include "kcrystal/crystal_engine.hpp"
#include "kcrystal/sign_crystal.hpp"

using namespace kcrystal;

static void BM_Reduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Sign> sym(n);
  for (auto& s : sym) s = (rng() & 1) ? Sign::Minus : Sign::Plus;
  const SignString t(sym);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oN);

static void BM_Boundary(benchmark::State& state) {
  const auto p = Params::rational(1, 3, {0, 1, 2});
  const auto all = multipartitions_of(3, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& m : all)
      for (long z = 0; z < 3; ++z) benchmark::DoNotOptimize(boundary(p, m, ZClass::residue(z)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()) * 3);
}
BENCHMARK(BM_Boundary)->Arg(4)->Arg(8);

static void BM_Depth(benchmark::State& state) {
  const auto p = Params::rational(1, 2, {0, 1});
  const auto all = multipartitions_up_to(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DepthCalculator calc(p);
    for (const auto& m : all) benchmark::DoNotOptimize(calc.depth(m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_Depth)->Arg(6)->Arg(10);

static void BM_BuildGraph(benchmark::State& state) {
  const auto p = Params::rational(1, 2, {0});
  GraphOptions opt;
  opt.max_boxes = 14;
  opt.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(p, opt));
}
BENCHMARK(BM_BuildGraph)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
