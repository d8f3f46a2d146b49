// Serial reference against the OpenMP kernel for each parallel scan.
#include <benchmark/benchmark.h>

#include "mucrit/residues.hpp"
#include "mucrit/search.hpp"

using namespace mucrit;

namespace {

SearchOptions mode(const benchmark::State& state) {
  SearchOptions opt;
  opt.parallel = state.range(0) != 0;
  return opt;
}

void BM_Levson(benchmark::State& state) {
  const auto opt = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(levson_scan(3000, opt));
}

void BM_Sumset(benchmark::State& state) {
  const auto opt = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumset_search(61, 30, opt));
    benchmark::DoNotOptimize(sumset_search(61, 20, opt));
  }
}

void BM_Diffset(benchmark::State& state) {
  const auto opt = mode(state);
  // every admissible d for a handful of primes; single searches finish too fast to time
  for (auto _ : state) {
    for (u64 p : {1009ULL, 1201ULL, 1801ULL}) {
      for (u64 d = 2; d + 1 < p; ++d)
        if ((p - 1) % d == 0) benchmark::DoNotOptimize(diffset_search(p, d, opt));
    }
  }
}

void BM_Problem2(benchmark::State& state) {
  const auto opt = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(problem2_scan(41, 5, opt));
}

void BM_ResidueSuite(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? random_residue_suite(10007, 1000, 0)
                                      : random_residue_suite_serial(10007, 1000, 0));
  }
}

}  // namespace

BENCHMARK(BM_Levson)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Sumset)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Diffset)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Problem2)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ResidueSuite)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
