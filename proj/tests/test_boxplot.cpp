#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ftsdepth/boxplot.hpp"
#include "ftsdepth/depth.hpp"
#include "ftsdepth/errors.hpp"
#include "ftsdepth/io.hpp"
#include "ftsdepth/rng.hpp"
#include "ftsdepth/simulate.hpp"

#include "oracles.hpp"

using namespace fts;

namespace {

FunctionalSample constants(std::initializer_list<double> levels) {
    Grid g({0.0, 0.5, 1.0});
    std::vector<Curve> curves;
    for (double level : levels) curves.push_back(Curve{std::vector<double>(3, level)});
    return FunctionalSample(g, std::move(curves));
}

FunctionalSample add_common(const FunctionalSample& s, const std::vector<double>& offset) {
    std::vector<Curve> curves;
    for (const Curve& c : s.curves()) {
        Curve out = c;
        for (std::size_t j = 0; j < out.values.size(); ++j) out.values[j] += offset[j];
        curves.push_back(std::move(out));
    }
    return FunctionalSample(s.grid(), std::move(curves));
}

} // namespace

TEST_CASE("median of five constants is the middle one") {
    FunctionalSample s = constants({0.0, 1.0, 2.0, 3.0, 4.0});
    // Depth of the middle constant is strictly maximal (oracle-checked).
    const DepthVector d = cgbd_all(s);
    for (std::size_t l = 0; l < 5; ++l) {
        CHECK(d.values[l] == doctest::Approx(oracle::brute_force_cgbd(s.curve(l), s)).epsilon(1e-14));
    }
    for (std::size_t l = 0; l < 5; ++l) {
        if (l != 2) CHECK(d.values[2] > d.values[l]);
    }
    BoxplotSummary b = functional_boxplot(s);
    CHECK(b.median_index == 2);
}

TEST_CASE("identical curves give a zero-width envelope and no outliers") {
    FunctionalSample s = constants({1.0, 1.0, 1.0, 1.0});
    BoxplotSummary b = functional_boxplot(s);
    CHECK(b.outlier_indices.empty());
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(b.central_lower[t] == 1.0);
        CHECK(b.central_upper[t] == 1.0);
        CHECK(b.fence_lower[t] == 1.0);
        CHECK(b.fence_upper[t] == 1.0);
    }
}

TEST_CASE("a far-away curve is flagged as an outlier") {
    Grid g = preset_grid(40);
    FunctionalSample base = wiener_sample(20, g, 8);
    std::vector<Curve> curves = base.curves();
    curves.push_back(Curve{std::vector<double>(40, 1e6)});
    FunctionalSample s(g, std::move(curves));

    BoxplotSummary b = functional_boxplot(s);
    CHECK(std::find(b.outlier_indices.begin(), b.outlier_indices.end(), 20) !=
          b.outlier_indices.end());
    CHECK(b.median_index != 20);
}

TEST_CASE("central curves lie within the envelope and fences bracket it") {
    auto eng = rng::stream(14);
    FunctionalSample s = oracle::random_sample(eng, 12, 18);
    BoxplotSummary b = functional_boxplot(s);

    const DepthVector d = cgbd_all(s);
    const auto central = depth_region(d, 0.5);
    for (std::size_t idx : central) {
        const auto& v = s.curve(idx).values;
        for (std::size_t t = 0; t < v.size(); ++t) {
            CHECK(v[t] >= b.central_lower[t]);
            CHECK(v[t] <= b.central_upper[t]);
        }
    }
    for (std::size_t t = 0; t < s.n_points(); ++t) {
        CHECK(b.fence_lower[t] <= b.central_lower[t]);
        CHECK(b.fence_upper[t] >= b.central_upper[t]);
        CHECK(b.central_lower[t] <= b.central_upper[t]);
    }
    // The median never flags itself.
    CHECK(std::find(b.outlier_indices.begin(), b.outlier_indices.end(), b.median_index) ==
          b.outlier_indices.end());
}

TEST_CASE("outlier set is invariant under adding a common curve") {
    Grid g = preset_grid(25);
    FunctionalSample base = wiener_sample(15, g, 9);
    std::vector<Curve> curves = base.curves();
    curves.push_back(Curve{std::vector<double>(25, 50.0)});
    FunctionalSample s(g, std::move(curves));

    std::vector<double> offset(25);
    for (std::size_t j = 0; j < 25; ++j) offset[j] = 3.0 + std::sin(static_cast<double>(j));

    BoxplotSummary before = functional_boxplot(s);
    BoxplotSummary after = functional_boxplot(add_common(s, offset));
    CHECK(before.outlier_indices == after.outlier_indices);
    CHECK(before.median_index == after.median_index);
}

TEST_CASE("infinite fence factor disables outlier flagging") {
    Grid g = preset_grid(20);
    FunctionalSample base = wiener_sample(10, g, 10);
    std::vector<Curve> curves = base.curves();
    curves.push_back(Curve{std::vector<double>(20, 1e9)});
    FunctionalSample s(g, std::move(curves));

    BoxplotSummary b = functional_boxplot(s, 0.5, std::numeric_limits<double>::infinity());
    CHECK(b.outlier_indices.empty());
}

TEST_CASE("boxplot needs at least four curves") {
    FunctionalSample s = constants({0.0, 1.0, 2.0});
    CHECK_THROWS_AS(functional_boxplot(s), validation_error);
}

TEST_CASE("boxplot serialization carries the block columns and outliers") {
    FunctionalSample s = constants({0.0, 1.0, 2.0, 3.0, 4.0});
    BoxplotSummary b = functional_boxplot(s);
    std::ostringstream out;
    save_boxplot_csv(b, s, out);
    CHECK(out.str().rfind("t,median,central_lower,central_upper,fence_lower,fence_upper\n", 0) == 0);
    const std::string j = boxplot_to_json(b);
    CHECK(j.find("\"median_index\":2") != std::string::npos);
    CHECK(j.find("\"outlier_indices\"") != std::string::npos);
}
