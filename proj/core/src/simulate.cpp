#include "ftsdepth/simulate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/parallel.hpp"
#include "ftsdepth/rng.hpp"

namespace fts {

namespace {

// Stream tags keep curve draws of different generators independent even
// under one seed.
constexpr std::uint64_t tag_path = 0x01;
constexpr std::uint64_t tag_far_error = 0x02;
constexpr std::uint64_t tag_mixture = 0x03;

void require_origin(const Grid& grid, bool shift_origin) {
    if (grid.point(0) != 0.0 && !shift_origin) {
        throw validation_error("the grid must start at 0 for this process (first point is " +
                               std::to_string(grid.point(0)) + "); pass shift_origin to relabel time");
    }
}

std::vector<double> wiener_path(const Grid& grid, std::mt19937_64& eng) {
    const std::size_t p = grid.size();
    std::vector<double> increments(p - 1);
    rng::fill_gaussian(eng, increments);
    std::vector<double> values(p);
    values[0] = 0.0;
    for (std::size_t j = 0; j + 1 < p; ++j) {
        const double dt = grid.point(j + 1) - grid.point(j);
        values[j + 1] = values[j] + std::sqrt(dt) * increments[j];
    }
    return values;
}

void bridge_transform(const Grid& grid, std::vector<double>& values) {
    const std::size_t p = grid.size();
    const double horizon = grid.point(p - 1);
    const double terminal = values[p - 1];
    for (std::size_t j = 0; j < p; ++j) {
        values[j] -= grid.point(j) / horizon * terminal;
    }
    values[p - 1] = 0.0;
}

std::vector<double> model_curve(const CurveModel& model, const Grid& grid, std::mt19937_64& eng) {
    std::vector<double> values = wiener_path(grid, eng);
    if (model.kind == CurveModel::Kind::brownian_bridge) bridge_transform(grid, values);
    if (model.shift != 0.0) {
        for (double& v : values) v += model.shift;
    }
    return values;
}

double kernel_value(const Far1Kernel& kernel, double t, double s) {
    if (kernel.type == Far1Kernel::Type::constant) return kernel.scale;
    return kernel.scale * std::exp(-0.5 * (t * t + s * s));
}

} // namespace

FunctionalSample wiener_sample(std::size_t n, const Grid& grid, std::uint64_t seed,
                               bool shift_origin) {
    require_origin(grid, shift_origin);
    std::vector<Curve> curves(n);
    parallel::parallel_for(n, [&](std::size_t i) {
        auto eng = rng::stream(seed, tag_path, i);
        curves[i].values = wiener_path(grid, eng);
    });
    return FunctionalSample(grid, std::move(curves));
}

FunctionalSample brownian_bridge_sample(std::size_t n, const Grid& grid, std::uint64_t seed) {
    require_origin(grid, false);
    std::vector<Curve> curves(n);
    parallel::parallel_for(n, [&](std::size_t i) {
        auto eng = rng::stream(seed, tag_path, i);
        curves[i].values = wiener_path(grid, eng);
        bridge_transform(grid, curves[i].values);
    });
    return FunctionalSample(grid, std::move(curves));
}

double far1_kernel_norm(const Far1Kernel& kernel, const Grid& grid) {
    const auto w = grid.weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double psi = kernel_value(kernel, grid.point(i), grid.point(j));
            acc += w[i] * w[j] * psi * psi;
        }
    }
    return std::sqrt(acc);
}

double gaussian_kernel_scale_for_norm(const Grid& grid, double target_norm) {
    Far1Kernel unit{Far1Kernel::Type::gaussian, 1.0};
    return target_norm / far1_kernel_norm(unit, grid);
}

FunctionalSample far1_sample(std::size_t n, const Grid& grid, const Far1Config& config,
                             std::uint64_t seed) {
    require_origin(grid, false);
    if (n < 1) throw validation_error("far1_sample needs at least 1 curve");

    const double norm = far1_kernel_norm(config.kernel, grid);
    if (!(norm < 1.0)) {
        throw validation_error("FAR(1) kernel has operator norm " + std::to_string(norm) +
                               " >= 1; no stationary solution exists");
    }

    const std::size_t p = grid.size();
    const auto w = grid.weights();

    // Quadrature matrix M[t][s] = psi(t, s) * w_s so a step is one matvec.
    std::vector<double> op(p * p);
    for (std::size_t t = 0; t < p; ++t) {
        for (std::size_t s = 0; s < p; ++s) {
            op[t * p + s] = kernel_value(config.kernel, grid.point(t), grid.point(s)) * w[s];
        }
    }

    auto error_curve = [&](std::size_t step) {
        auto eng = rng::stream(seed, tag_far_error, step);
        std::vector<double> values = wiener_path(grid, eng);
        if (config.error == ErrorProcess::brownian_bridge) bridge_transform(grid, values);
        return values;
    };

    std::vector<Curve> out;
    out.reserve(n);
    std::vector<double> state = error_curve(0);
    if (config.burn_in == 0) out.push_back(Curve{state});
    std::vector<double> next(p);
    for (std::size_t step = 1; out.size() < n; ++step) {
        const std::vector<double> eps = error_curve(step);
        for (std::size_t t = 0; t < p; ++t) {
            double acc = 0.0;
            const double* row = op.data() + t * p;
            for (std::size_t s = 0; s < p; ++s) acc += row[s] * state[s];
            next[t] = acc + eps[t];
        }
        state = next;
        if (step >= config.burn_in) out.push_back(Curve{state});
    }
    return FunctionalSample(grid, std::move(out));
}

FunctionalSample mixture_sample(std::size_t n, const Grid& grid, const MixtureConfig& config,
                                std::uint64_t seed) {
    if (!(config.contamination >= 0.0) || config.contamination > 1.0) {
        throw validation_error("mixture contamination must lie in [0, 1], got " +
                               std::to_string(config.contamination));
    }
    require_origin(grid, false);
    std::vector<Curve> curves(n);
    std::vector<std::string> labels(n);
    parallel::parallel_for(n, [&](std::size_t i) {
        auto eng = rng::stream(seed, tag_mixture, i);
        const bool contaminated = rng::uniform01(eng) < config.contamination;
        const CurveModel& model = contaminated ? config.component_b : config.component_a;
        curves[i].values = model_curve(model, grid, eng);
        labels[i] = contaminated ? "b" : "a";
    });
    return FunctionalSample(grid, std::move(curves), std::move(labels));
}

Grid preset_grid(std::size_t n_points) {
    return uniform_grid(n_points, 0.0, 1.0);
}

} // namespace fts
