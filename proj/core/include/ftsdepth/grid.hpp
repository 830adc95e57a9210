#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fts {

/// Common evaluation grid for a set of curves: strictly increasing time
/// points t_1 < ... < t_p on a compact interval, plus trapezoid quadrature
/// weights standing in for Lebesgue measure on that interval.
///
/// Immutable after construction. sum(weights) == t_p - t_1 up to rounding.
class Grid {
public:
    /// Validates and builds the grid. Throws fts::validation_error if fewer
    /// than two points are given or points are not finite and strictly
    /// increasing; the message names the offending index.
    explicit Grid(std::vector<double> points);

    std::size_t size() const { return points_.size(); }
    std::span<const double> points() const { return points_; }
    std::span<const double> weights() const { return weights_; }
    double point(std::size_t i) const { return points_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }

    /// Total measure of the interval, t_p - t_1.
    double length() const { return length_; }

    friend bool operator==(const Grid& a, const Grid& b) { return a.points_ == b.points_; }

private:
    std::vector<double> points_;
    std::vector<double> weights_;
    double length_ = 0.0;
};

inline Grid make_grid(std::vector<double> points) { return Grid(std::move(points)); }

/// n equally spaced points spanning [a, b].
Grid uniform_grid(std::size_t n, double a = 0.0, double b = 1.0);

} // namespace fts
