#include "ftsdepth/boxplot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ftsdepth/depth.hpp"
#include "ftsdepth/errors.hpp"

namespace fts {

BoxplotSummary functional_boxplot(const FunctionalSample& sample, double central_prop,
                                  double factor) {
    if (sample.size() < 4) {
        throw validation_error("a functional boxplot needs at least 4 curves, got " +
                               std::to_string(sample.size()));
    }
    if (!(central_prop > 0.0) || central_prop > 1.0) {
        throw validation_error("central proportion must lie in (0, 1], got " +
                               std::to_string(central_prop));
    }
    if (std::isfinite(factor) && factor < 0.0) {
        throw validation_error("fence factor must be nonnegative");
    }

    const DepthVector depths = cgbd_all(sample);
    const std::size_t p = sample.n_points();

    BoxplotSummary summary;
    summary.median_index = static_cast<std::size_t>(
        std::max_element(depths.values.begin(), depths.values.end()) - depths.values.begin());

    const std::vector<std::size_t> central = depth_region(depths, central_prop);
    summary.central_lower.assign(p, std::numeric_limits<double>::infinity());
    summary.central_upper.assign(p, -std::numeric_limits<double>::infinity());
    for (std::size_t idx : central) {
        const auto& v = sample.curve(idx).values;
        for (std::size_t t = 0; t < p; ++t) {
            summary.central_lower[t] = std::min(summary.central_lower[t], v[t]);
            summary.central_upper[t] = std::max(summary.central_upper[t], v[t]);
        }
    }

    summary.fence_lower.resize(p);
    summary.fence_upper.resize(p);
    if (std::isfinite(factor)) {
        for (std::size_t t = 0; t < p; ++t) {
            const double range = summary.central_upper[t] - summary.central_lower[t];
            summary.fence_lower[t] = summary.central_lower[t] - factor * range;
            summary.fence_upper[t] = summary.central_upper[t] + factor * range;
        }
        for (std::size_t i = 0; i < sample.size(); ++i) {
            const auto& v = sample.curve(i).values;
            for (std::size_t t = 0; t < p; ++t) {
                if (v[t] < summary.fence_lower[t] || v[t] > summary.fence_upper[t]) {
                    summary.outlier_indices.push_back(i);
                    break;
                }
            }
        }
    } else {
        summary.fence_lower.assign(p, -std::numeric_limits<double>::infinity());
        summary.fence_upper.assign(p, std::numeric_limits<double>::infinity());
    }
    return summary;
}

} // namespace fts
