#include "ftsdepth/grid.hpp"

#include <cmath>
#include <string>

#include "ftsdepth/errors.hpp"

namespace fts {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw validation_error("grid needs at least 2 points, got " + std::to_string(points_.size()));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i])) {
            throw validation_error("grid point at index " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && points_[i] <= points_[i - 1]) {
            throw validation_error("grid points must be strictly increasing; violation at index " +
                                   std::to_string(i));
        }
    }

    const std::size_t p = points_.size();
    weights_.resize(p);
    weights_.front() = 0.5 * (points_[1] - points_[0]);
    for (std::size_t j = 1; j + 1 < p; ++j) {
        weights_[j] = 0.5 * (points_[j + 1] - points_[j - 1]);
    }
    weights_.back() = 0.5 * (points_[p - 1] - points_[p - 2]);
    length_ = points_.back() - points_.front();
}

Grid uniform_grid(std::size_t n, double a, double b) {
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    if (n >= 1) pts.back() = b;
    return Grid(std::move(pts));
}

} // namespace fts
