// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "runslab/bounds.hpp"
#include "runslab/search.hpp"

namespace {

using namespace runslab;

void BM_search_serial(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_m_d_serial(d).m_d);
}

void BM_search_parallel(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_m_d(d).m_d);
}

void BM_rho_serial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rho_brute_serial(n).max_runs);
}

void BM_rho_parallel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rho_brute(n).max_runs);
}

void BM_floor_serial(benchmark::State& state) {
    int len = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dprime_floor_serial(len).minimum);
}

void BM_floor_parallel(benchmark::State& state) {
    int len = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dprime_floor(len).minimum);
}

} // namespace

BENCHMARK(BM_search_serial)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_parallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rho_serial)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rho_parallel)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_floor_serial)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_floor_parallel)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
