#include <benchmark/benchmark.h>

#include "trn/cycles.hpp"
#include "trn/gen.hpp"
#include "trn/packing.hpp"
#include "trn/structure.hpp"

namespace {

void BM_RandomTournament(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trn::random_tournament(n, seed++));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RandomTournament)->Arg(16)->Arg(64)->Arg(256);

void BM_Condense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const trn::Tournament t = trn::random_tournament(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trn::condense(t));
  }
}
BENCHMARK(BM_Condense)->Arg(16)->Arg(64)->Arg(256);

void BM_CycleThroughVertex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const trn::Tournament t = trn::random_min_outdegree(n, (n - 1) / 3, 11);
  int len = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trn::moon_cycle(t, 0, len));
    len = (len == n) ? 3 : len + 1;
  }
}
BENCHMARK(BM_CycleThroughVertex)->Arg(16)->Arg(48);

void BM_EnumerateTriangles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const trn::Tournament t = trn::random_tournament(n, 13);
  for (auto _ : state) {
    long count = 0;
    trn::for_each_cycle(t, 3, 3, [&](const std::vector<int>&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTriangles)->Arg(16)->Arg(32)->Arg(48);

void BM_FindPacking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const trn::Tournament t = trn::random_min_outdegree(n, 6, 17);
  const trn::PackingSpec spec = trn::PackingSpec::distinct(3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trn::find_packing(t, spec));
  }
}
BENCHMARK(BM_FindPacking)->Arg(13)->Arg(16)->Arg(20);

void BM_CriticalReduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const trn::Tournament t = trn::random_tournament(n, 23);
  const int r = (n - 1) / 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trn::outdegree_critical_reduce(t, r));
  }
}
BENCHMARK(BM_CriticalReduce)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
