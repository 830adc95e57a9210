#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ftsdepth/grid.hpp"

namespace fts {

/// One curve observed on a grid: just the values, one per grid point.
struct Curve {
    std::vector<double> values;
};

/// An ordered collection of curves sharing a single grid, with optional
/// per-curve labels. Immutable after construction; safe to share across
/// threads read-only.
class FunctionalSample {
public:
    /// Throws fts::validation_error on length mismatches or non-finite
    /// values. Labels may be empty (then every label is "").
    FunctionalSample(Grid grid, std::vector<Curve> curves, std::vector<std::string> labels = {});

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return curves_.size(); }
    std::size_t n_points() const { return grid_.size(); }
    const Curve& curve(std::size_t i) const { return curves_[i]; }
    const std::vector<Curve>& curves() const { return curves_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// New sample keeping only the curves at `indices`, in the given order.
    FunctionalSample subset(std::span<const std::size_t> indices) const;

    /// New sample over curves [first, first + count).
    FunctionalSample slice(std::size_t first, std::size_t count) const;

private:
    Grid grid_;
    std::vector<Curve> curves_;
    std::vector<std::string> labels_;
};

/// Concatenates two samples sharing a grid; `first`'s curves come first.
FunctionalSample concatenate(const FunctionalSample& first, const FunctionalSample& second);

/// Throws fts::validation_error unless both samples share one grid.
void require_same_grid(const FunctionalSample& a, const FunctionalSample& b);

} // namespace fts
