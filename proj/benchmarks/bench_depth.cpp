#include <benchmark/benchmark.h>

#include "ftsdepth/depth.hpp"
#include "ftsdepth/parallel.hpp"
#include "ftsdepth/simulate.hpp"

namespace {

void BM_cgbd_all(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = static_cast<std::size_t>(state.range(1));
    const fts::Grid grid = fts::preset_grid(p);
    const fts::FunctionalSample sample = fts::wiener_sample(n, grid, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fts::cgbd_all(sample));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n * n * p / 2));
}
BENCHMARK(BM_cgbd_all)
    ->Args({25, 120})
    ->Args({50, 120})
    ->Args({100, 120})
    ->Args({100, 1440})
    ->Unit(benchmark::kMillisecond);

void BM_cgbd_all_single_thread(benchmark::State& state) {
    const fts::Grid grid = fts::preset_grid(1440);
    const fts::FunctionalSample sample = fts::wiener_sample(100, grid, 42);
    fts::parallel::set_max_workers(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fts::cgbd_all(sample));
    }
    fts::parallel::set_max_workers(0);
}
BENCHMARK(BM_cgbd_all_single_thread)->Unit(benchmark::kMillisecond);

void BM_local_cgbd_all(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const fts::Grid grid = fts::preset_grid(120);
    const fts::FunctionalSample sample = fts::wiener_sample(n, grid, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fts::local_cgbd_all(sample, 0.4));
    }
}
BENCHMARK(BM_local_cgbd_all)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

} // namespace
