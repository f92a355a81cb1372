#include <benchmark/benchmark.h>

#include "connmat/algebra.hpp"
#include "connmat/conn_matrix.hpp"
#include "connmat/determinant.hpp"
#include "connmat/lattice.hpp"
#include "connmat/reliability.hpp"

using namespace connmat;

static void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Pi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Partition unit = Partition::singletons(n);
    for (auto _ : state) benchmark::DoNotOptimize(pi(unit));
}
BENCHMARK(BM_Pi)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BuildConnMatrix(benchmark::State& state) {
    const CoherentOrder order = CoherentOrder::standard(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_connectivity_matrix(order));
}
BENCHMARK(BM_BuildConnMatrix)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_DeterminantDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ConnMatrix a = build_connectivity_matrix(CoherentOrder::standard(n));
    for (auto _ : state) benchmark::DoNotOptimize(determinant_direct(a));
}
BENCHMARK(BM_DeterminantDirect)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_DeterminantAlpha(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(determinant_alpha(n));
}
BENCHMARK(BM_DeterminantAlpha)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ReliabilityComplete(benchmark::State& state) {
    const Multigraph g = complete_graph(static_cast<int>(state.range(0)));
    ReliabilityOptions options;
    options.memoize = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(reliability_polynomial(g, options));
}
BENCHMARK(BM_ReliabilityComplete)
    ->Args({6, 0})
    ->Args({6, 1})
    ->Args({7, 0})
    ->Args({7, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_PathsetCounts(benchmark::State& state) {
    const Multigraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pathset_counts(g));
}
BENCHMARK(BM_PathsetCounts)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
