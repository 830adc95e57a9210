#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/meboot.hpp"
#include "ftsdepth/rng.hpp"
#include "ftsdepth/simulate.hpp"

#include "oracles.hpp"

using namespace fts;

TEST_CASE("constant series is a fixed point") {
    MeBootConfig config;
    auto eng = rng::stream(1);
    const std::vector<double> series = {5.0, 5.0, 5.0, 5.0};
    CHECK(meboot_scalar(series, config, eng) == series);
}

TEST_CASE("quantile nodes of the worked example") {
    const std::vector<double> series = {4.0, 12.0, 36.0, 20.0, 8.0};
    const std::vector<double> z = detail::meboot_quantile_nodes(series, 0.10);
    REQUIRE(z.size() == 6);
    // Sorted series (4, 8, 12, 20, 36): interior midpoints 6, 10, 16, 28;
    // mean absolute difference 15 extends the ends.
    CHECK(z[1] == 6.0);
    CHECK(z[2] == 10.0);
    CHECK(z[3] == 16.0);
    CHECK(z[4] == 28.0);
    CHECK(z[0] == 4.0 - 15.0);
    CHECK(z[5] == 36.0 + 15.0);
}

TEST_CASE("step-by-step oracle equivalence with a shared stream") {
    MeBootConfig config;
    config.trim = 0.10;
    const std::vector<double> series = {4.0, 12.0, 36.0, 20.0, 8.0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto eng_prod = rng::stream(seed, 99);
        auto eng_oracle = rng::stream(seed, 99);
        const auto prod = meboot_scalar(series, config, eng_prod);
        const auto ref = oracle::meboot_replicate(series, 0.10, eng_oracle);
        CHECK(prod == ref);
    }
}

TEST_CASE("oracle equivalence on random series with ties") {
    MeBootConfig config;
    auto eng_data = rng::stream(12);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng::uniform01(eng_data) * 40);
        std::vector<double> series(n);
        rng::fill_gaussian(eng_data, series);
        if (rep % 2 == 0) {
            for (double& v : series) v = std::round(v * 4.0) / 4.0;
        }
        auto eng_prod = rng::stream(500 + static_cast<std::uint64_t>(rep));
        auto eng_oracle = rng::stream(500 + static_cast<std::uint64_t>(rep));
        CHECK(meboot_scalar(series, config, eng_prod) ==
              oracle::meboot_replicate(series, 0.10, eng_oracle));
    }
}

TEST_CASE("replicate ranks equal input ranks") {
    MeBootConfig config;
    auto eng_data = rng::stream(21);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng::uniform01(eng_data) * 30);
        std::vector<double> series(n);
        rng::fill_gaussian(eng_data, series);
        const bool tied = rep % 3 == 0;
        if (tied) {
            for (double& v : series) v = std::round(v);
        }
        auto eng = rng::stream(9000 + static_cast<std::uint64_t>(rep));
        const auto rep_values = meboot_scalar(series, config, eng);

        // The stable permutation sorting the input sorts the replicate.
        std::vector<std::size_t> in_order(n);
        std::iota(in_order.begin(), in_order.end(), 0);
        std::stable_sort(in_order.begin(), in_order.end(),
                         [&](std::size_t a, std::size_t b) { return series[a] < series[b]; });
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(rep_values[in_order[k - 1]] <= rep_values[in_order[k]]);
        }

        // Without input ties the two sorting permutations agree exactly.
        if (!tied) {
            std::vector<std::size_t> out_order(n);
            std::iota(out_order.begin(), out_order.end(), 0);
            std::stable_sort(out_order.begin(), out_order.end(), [&](std::size_t a, std::size_t b) {
                return rep_values[a] < rep_values[b];
            });
            CHECK(in_order == out_order);
        }
    }
}

TEST_CASE("replicate support stays within the extended nodes") {
    MeBootConfig config;
    auto eng_data = rng::stream(33);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> series(25);
        rng::fill_gaussian(eng_data, series);
        const auto z = detail::meboot_quantile_nodes(series, config.trim);
        const double m_trm = z.back() - *std::max_element(series.begin(), series.end());

        auto eng = rng::stream(777 + static_cast<std::uint64_t>(rep));
        const auto rep_values = meboot_scalar(series, config, eng);
        for (double v : rep_values) {
            CHECK(v >= z.front() - m_trm);
            CHECK(v <= z.back() + m_trm);
        }
    }
}

TEST_CASE("determinism: same series, config, and seed give identical replicates") {
    MeBootConfig config;
    std::vector<double> series = {1.0, -2.0, 0.5, 3.0, 0.0, 7.0};
    auto a = rng::stream(4242);
    auto b = rng::stream(4242);
    CHECK(meboot_scalar(series, config, a) == meboot_scalar(series, config, b));
}

TEST_CASE("meboot rejects degenerate input") {
    MeBootConfig config;
    auto eng = rng::stream(0);
    CHECK_THROWS_AS(meboot_scalar(std::vector<double>{1.0}, config, eng), validation_error);
    CHECK_THROWS_AS(meboot_scalar(std::vector<double>{1.0, std::nan("")}, config, eng),
                    validation_error);
    config.trim = 0.5;
    CHECK_THROWS_AS(meboot_scalar(std::vector<double>{1.0, 2.0}, config, eng), validation_error);
}

TEST_CASE("fts replicates preserve shape and collapse on constant curves") {
    Grid g({0.0, 0.5, 1.0});
    FunctionalSample constant(g, {Curve{{2.0, 2.0, 2.0}}, Curve{{2.0, 2.0, 2.0}},
                                  Curve{{2.0, 2.0, 2.0}}});
    MeBootConfig config;
    config.replicates = 3;
    config.seed = 5;
    const auto reps = meboot_fts(constant, config);
    REQUIRE(reps.size() == 3);
    for (const auto& rep : reps) {
        CHECK(rep.size() == constant.size());
        CHECK(rep.grid() == constant.grid());
        for (std::size_t i = 0; i < rep.size(); ++i) {
            CHECK(rep.curve(i).values == constant.curve(i).values);
        }
    }
}

TEST_CASE("fts replicates are approximately mean preserving per coordinate") {
    Grid g = preset_grid(30);
    FunctionalSample sample = wiener_sample(50, g, 31);
    MeBootConfig config;
    config.replicates = 200;
    config.seed = 77;
    const auto reps = meboot_fts(sample, config);

    for (std::size_t j = 0; j < g.size(); ++j) {
        double input_mean = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i) input_mean += sample.curve(i).values[j];
        input_mean /= static_cast<double>(sample.size());

        double input_var = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            const double d = sample.curve(i).values[j] - input_mean;
            input_var += d * d;
        }
        const double input_sd = std::sqrt(input_var / static_cast<double>(sample.size() - 1));

        double rep_mean = 0.0;
        for (const auto& rep : reps) {
            for (std::size_t i = 0; i < rep.size(); ++i) rep_mean += rep.curve(i).values[j];
        }
        rep_mean /= static_cast<double>(config.replicates * sample.size());

        CHECK(std::abs(rep_mean - input_mean) <= 0.1 * input_sd);
    }
}

TEST_CASE("fts determinism and per-replicate stream independence") {
    Grid g = preset_grid(10);
    FunctionalSample sample = wiener_sample(6, g, 3);
    MeBootConfig config;
    config.replicates = 2;
    config.seed = 11;
    const auto a = meboot_fts(sample, config);
    const auto b = meboot_fts(sample, config);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t i = 0; i < sample.size(); ++i) {
            CHECK(a[r].curve(i).values == b[r].curve(i).values);
        }
    }
    // Distinct replicates differ somewhere.
    bool differ = false;
    for (std::size_t i = 0; i < sample.size() && !differ; ++i) {
        differ = a[0].curve(i).values != a[1].curve(i).values;
    }
    CHECK(differ);
}
