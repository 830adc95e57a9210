#include "ftsdepth/meboot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/parallel.hpp"
#include "ftsdepth/rng.hpp"

namespace fts {

namespace {

void require_series(std::span<const double> series) {
    if (series.size() < 2) {
        throw validation_error("meboot needs a series of at least 2 values, got " +
                               std::to_string(series.size()));
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!std::isfinite(series[i])) {
            throw validation_error("meboot input has a non-finite value at index " + std::to_string(i));
        }
    }
}

void require_config(const MeBootConfig& config) {
    if (!(config.trim >= 0.0) || config.trim >= 0.5) {
        throw validation_error("meboot trim proportion must lie in [0, 0.5), got " +
                               std::to_string(config.trim));
    }
    if (config.replicates < 1) {
        throw validation_error("meboot needs at least 1 replicate");
    }
}

double trimmed_mean_abs_diff(std::span<const double> series, double trim) {
    std::vector<double> diffs(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        diffs[i] = std::abs(series[i + 1] - series[i]);
    }
    std::sort(diffs.begin(), diffs.end());
    const auto cut = static_cast<std::size_t>(trim * static_cast<double>(diffs.size()));
    double sum = 0.0;
    for (std::size_t i = cut; i < diffs.size() - cut; ++i) sum += diffs[i];
    return sum / static_cast<double>(diffs.size() - 2 * cut);
}

} // namespace

namespace detail {

std::vector<double> meboot_quantile_nodes(std::span<const double> series, double trim) {
    const std::size_t n = series.size();
    std::vector<double> sorted(series.begin(), series.end());
    std::sort(sorted.begin(), sorted.end());

    const double m_trm = trimmed_mean_abs_diff(series, trim);
    std::vector<double> z(n + 1);
    z.front() = sorted.front() - m_trm;
    for (std::size_t t = 1; t < n; ++t) z[t] = 0.5 * (sorted[t - 1] + sorted[t]);
    z.back() = sorted.back() + m_trm;
    return z;
}

} // namespace detail

std::vector<double> meboot_scalar(std::span<const double> series, const MeBootConfig& config,
                                  std::mt19937_64& eng) {
    require_series(series);
    require_config(config);
    const std::size_t n = series.size();

    // Stable argsort; ties keep time order so a tied input yields a
    // reproducible rank assignment.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return series[a] < series[b]; });

    std::vector<double> sorted(n);
    for (std::size_t k = 0; k < n; ++k) sorted[k] = series[order[k]];

    const std::vector<double> z = detail::meboot_quantile_nodes(series, config.trim);

    // Desired interval means and the per-interval shift that realizes them
    // (an interval's unshifted average under a uniform draw is its node
    // midpoint).
    std::vector<double> shift(n);
    for (std::size_t k = 0; k < n; ++k) {
        double desired;
        if (k == 0) {
            desired = 0.75 * sorted[0] + 0.25 * sorted[1];
        } else if (k + 1 == n) {
            desired = 0.25 * sorted[n - 2] + 0.75 * sorted[n - 1];
        } else {
            desired = 0.25 * sorted[k - 1] + 0.5 * sorted[k] + 0.25 * sorted[k + 1];
        }
        shift[k] = desired - 0.5 * (z[k] + z[k + 1]);
    }

    // Draw, map through the piecewise-linear quantile, mean-correct.
    std::vector<double> mapped(n);
    const auto dn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double pos = rng::uniform01(eng) * dn;
        auto k = static_cast<std::size_t>(pos);
        if (k >= n) k = n - 1;
        const double frac = pos - static_cast<double>(k);
        mapped[i] = z[k] + frac * (z[k + 1] - z[k]) + shift[k];
    }

    // Restore the input's rank structure.
    std::sort(mapped.begin(), mapped.end());
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[order[k]] = mapped[k];
    return out;
}

std::vector<FunctionalSample> meboot_fts(const FunctionalSample& sample,
                                         const MeBootConfig& config) {
    require_config(config);
    const std::size_t n = sample.size();
    const std::size_t p = sample.n_points();
    if (n < 2) {
        throw validation_error("meboot_fts needs at least 2 curves, got " + std::to_string(n));
    }

    std::vector<std::vector<Curve>> replicate_curves(config.replicates);
    parallel::parallel_for(config.replicates, [&](std::size_t b) {
        std::vector<Curve> curves(n);
        for (std::size_t i = 0; i < n; ++i) curves[i].values.resize(p);

        std::vector<double> series(n);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < n; ++i) series[i] = sample.curve(i).values[j];
            auto eng = rng::stream(config.seed, b, j, 0);
            const std::vector<double> rep = meboot_scalar(series, config, eng);
            for (std::size_t i = 0; i < n; ++i) curves[i].values[j] = rep[i];
        }
        replicate_curves[b] = std::move(curves);
    });

    std::vector<FunctionalSample> out;
    out.reserve(config.replicates);
    for (auto& curves : replicate_curves) {
        out.emplace_back(sample.grid(), std::move(curves), sample.labels());
    }
    return out;
}

} // namespace fts
