#include <benchmark/benchmark.h>

#include "butterfly/family.hpp"
#include "butterfly/odd_merge.hpp"
#include "butterfly/pent_recur.hpp"
#include "butterfly/power_series.hpp"
#include "butterfly/sequences.hpp"

using namespace butterfly;

static void EnumerateButterflies(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_family(n, {FamilyTag::Butterfly}));
}
BENCHMARK(EnumerateButterflies)->Arg(40)->Arg(80)->Arg(120);

static void EnumerateConjugateButterflies(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_family(n, {FamilyTag::ConjugateButterfly}));
}
BENCHMARK(EnumerateConjugateButterflies)->Arg(40)->Arg(60);

static void SplitMergeRoundTrip(benchmark::State& state) {
    const auto list = enumerate_family(static_cast<int>(state.range(0)), {FamilyTag::Butterfly});
    for (auto _ : state)
        for (const Partition& p : list) benchmark::DoNotOptimize(merge_odd(split(p, SplitVariant::Standard), SplitVariant::Standard));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(list.size()));
}
BENCHMARK(SplitMergeRoundTrip)->Arg(60);

static void CountCapped(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_capped(n, SplitVariant::Switched));
}
BENCHMARK(CountCapped)->Arg(40)->Arg(60);

static void VerifyIdentity(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(Identity::ButterflyComplete, order));
}
BENCHMARK(VerifyIdentity)->Arg(60)->Arg(200);

static void SeriesTable(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_table("p", N));
}
BENCHMARK(SeriesTable)->Arg(200);

static void RecursiveSolve(benchmark::State& state) {
    const auto N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(recursive_solve("s", N));
}
BENCHMARK(RecursiveSolve)->Arg(200)->Arg(400);
BENCHMARK_MAIN();
