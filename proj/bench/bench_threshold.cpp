// Serial reference vs OpenMP kernel for the threshold computation.

#include <benchmark/benchmark.h>

#include <map>

#include "equipart/cli.hpp"
#include "equipart/threshold.hpp"

namespace {

using equipart::PartSizes;

const PartSizes& instance(std::size_t count) {
    static std::map<std::size_t, PartSizes> cache;
    auto it = cache.find(count);
    if (it == cache.end()) {
        it = cache.emplace(count, equipart::cli::bench_instance(count, 1000000, 20240917)).first;
    }
    return it->second;
}

// Every part even except the last one: the level search cannot stop early.
PartSizes late_witness(std::size_t count) {
    std::vector<equipart::Int> sizes(count, 720720);
    sizes.back() = 720721;
    return PartSizes(std::move(sizes));
}

void BM_ChiStarSerial(benchmark::State& state) {
    const auto& parts = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equipart::chi_star(parts).chi_star);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ChiStarParallel(benchmark::State& state) {
    const auto& parts = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equipart::chi_star_parallel(parts).chi_star);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LevelSearchSerial(benchmark::State& state) {
    const auto parts = late_witness(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equipart::compute_h_fast(parts).h);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LevelSearchParallel(benchmark::State& state) {
    const auto parts = late_witness(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equipart::compute_h_parallel(parts).h);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_ChiStarSerial)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ChiStarParallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LevelSearchSerial)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LevelSearchParallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
