#include <benchmark/benchmark.h>

#include "ftsdepth/meboot.hpp"
#include "ftsdepth/rng.hpp"
#include "ftsdepth/simulate.hpp"
#include "ftsdepth/wilcoxon.hpp"

namespace {

void BM_meboot_scalar(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> series(n);
    auto eng = fts::rng::stream(3);
    fts::rng::fill_gaussian(eng, series);
    fts::MeBootConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fts::meboot_scalar(series, config, eng));
    }
}
BENCHMARK(BM_meboot_scalar)->Arg(100)->Arg(1000)->Arg(10000);

void BM_meboot_fts(benchmark::State& state) {
    const fts::Grid grid = fts::preset_grid(120);
    const fts::FunctionalSample sample = fts::wiener_sample(100, grid, 11);
    fts::MeBootConfig config;
    config.replicates = 10;
    config.seed = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fts::meboot_fts(sample, config));
    }
}
BENCHMARK(BM_meboot_fts)->Unit(benchmark::kMillisecond);

void BM_bootstrap_pvalue(benchmark::State& state) {
    const fts::Grid grid = fts::preset_grid(120);
    const fts::FunctionalSample a = fts::wiener_sample(50, grid, 21);
    const fts::FunctionalSample b = fts::wiener_sample(50, grid, 22);
    fts::MeBootConfig config;
    config.replicates = 200;
    config.seed = 9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fts::bootstrap_pvalue(a, b, 1.0, fts::RankScheme::eq4_max, config));
    }
}
BENCHMARK(BM_bootstrap_pvalue)->Unit(benchmark::kMillisecond);

} // namespace
