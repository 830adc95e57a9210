#include <doctest.h>

#include <cmath>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/fourier.hpp"
#include "ftsdepth/rng.hpp"
#include "ftsdepth/simulate.hpp"

using namespace fts;

namespace {

double rmse(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(acc / static_cast<double>(a.size()));
}

} // namespace

TEST_CASE("constant curve is reproduced with a single basis function") {
    Grid g = preset_grid(50);
    FunctionalSample s(g, {Curve{std::vector<double>(50, 3.25)}});
    FunctionalSample smoothed = fourier_smooth(s, 1);
    for (double v : smoothed.curve(0).values) {
        CHECK(v == doctest::Approx(3.25).epsilon(1e-12));
    }
}

TEST_CASE("cos(2*pi*t) is exactly representable with three basis functions") {
    Grid g = preset_grid(201);
    Curve c;
    c.values.resize(201);
    for (std::size_t j = 0; j < 201; ++j) {
        c.values[j] = std::cos(2.0 * M_PI * g.point(j));
    }
    FunctionalSample s(g, {c});
    FunctionalSample smoothed = fourier_smooth(s, 3);
    for (std::size_t j = 0; j < 201; ++j) {
        CHECK(std::abs(smoothed.curve(0).values[j] - c.values[j]) < 1e-8);
    }
}

TEST_CASE("smoothing a noisy sine moves it closer to the truth") {
    Grid g = preset_grid(120);
    auto eng = rng::stream(7);
    std::vector<double> truth(120), noisy(120), noise(120);
    rng::fill_gaussian(eng, noise);
    for (std::size_t j = 0; j < 120; ++j) {
        truth[j] = std::sin(2.0 * M_PI * g.point(j));
        noisy[j] = truth[j] + 0.1 * noise[j];
    }
    FunctionalSample s(g, {Curve{noisy}});
    FunctionalSample smoothed = fourier_smooth(s, 5);
    CHECK(rmse(smoothed.curve(0).values, truth) < rmse(noisy, truth));
}

TEST_CASE("fourier smoothing is idempotent") {
    Grid g = preset_grid(80);
    FunctionalSample s = wiener_sample(4, g, 99);
    FunctionalSample once = fourier_smooth(s, 7);
    FunctionalSample twice = fourier_smooth(once, 7);
    for (std::size_t i = 0; i < once.size(); ++i) {
        for (std::size_t j = 0; j < once.n_points(); ++j) {
            CHECK(std::abs(once.curve(i).values[j] - twice.curve(i).values[j]) < 1e-10);
        }
    }
}

TEST_CASE("basis size must be odd and within the grid") {
    Grid g = preset_grid(20);
    FunctionalSample s = wiener_sample(2, g, 1);
    CHECK_THROWS_AS(fourier_smooth(s, 4), validation_error);
    CHECK_THROWS_AS(fourier_smooth(s, 21), validation_error);
    CHECK_NOTHROW(fourier_smooth(s, 19));
}
