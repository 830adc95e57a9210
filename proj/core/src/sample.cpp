#include "ftsdepth/sample.hpp"

#include <cmath>
#include <utility>

#include "ftsdepth/errors.hpp"

namespace fts {

FunctionalSample::FunctionalSample(Grid grid, std::vector<Curve> curves,
                                   std::vector<std::string> labels)
    : grid_(std::move(grid)), curves_(std::move(curves)), labels_(std::move(labels)) {
    if (curves_.empty()) {
        throw validation_error("a functional sample needs at least one curve");
    }
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        if (curves_[i].values.size() != grid_.size()) {
            throw validation_error("curve " + std::to_string(i) + " has " +
                                   std::to_string(curves_[i].values.size()) + " values but the grid has " +
                                   std::to_string(grid_.size()) + " points");
        }
        for (std::size_t j = 0; j < curves_[i].values.size(); ++j) {
            if (!std::isfinite(curves_[i].values[j])) {
                throw validation_error("curve " + std::to_string(i) + " has a non-finite value at point " +
                                       std::to_string(j));
            }
        }
    }
    if (labels_.empty()) {
        labels_.resize(curves_.size());
    } else if (labels_.size() != curves_.size()) {
        throw validation_error("label count " + std::to_string(labels_.size()) +
                               " does not match curve count " + std::to_string(curves_.size()));
    }
}

FunctionalSample FunctionalSample::subset(std::span<const std::size_t> indices) const {
    std::vector<Curve> curves;
    std::vector<std::string> labels;
    curves.reserve(indices.size());
    labels.reserve(indices.size());
    for (std::size_t idx : indices) {
        if (idx >= curves_.size()) {
            throw validation_error("subset index " + std::to_string(idx) + " out of range");
        }
        curves.push_back(curves_[idx]);
        labels.push_back(labels_[idx]);
    }
    return FunctionalSample(grid_, std::move(curves), std::move(labels));
}

FunctionalSample FunctionalSample::slice(std::size_t first, std::size_t count) const {
    if (first + count > curves_.size()) {
        throw validation_error("slice [" + std::to_string(first) + ", " + std::to_string(first + count) +
                               ") out of range for sample of size " + std::to_string(curves_.size()));
    }
    std::vector<Curve> curves(curves_.begin() + static_cast<std::ptrdiff_t>(first),
                              curves_.begin() + static_cast<std::ptrdiff_t>(first + count));
    std::vector<std::string> labels(labels_.begin() + static_cast<std::ptrdiff_t>(first),
                                    labels_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return FunctionalSample(grid_, std::move(curves), std::move(labels));
}

FunctionalSample concatenate(const FunctionalSample& first, const FunctionalSample& second) {
    require_same_grid(first, second);
    std::vector<Curve> curves = first.curves();
    curves.insert(curves.end(), second.curves().begin(), second.curves().end());
    std::vector<std::string> labels = first.labels();
    labels.insert(labels.end(), second.labels().begin(), second.labels().end());
    return FunctionalSample(first.grid(), std::move(curves), std::move(labels));
}

void require_same_grid(const FunctionalSample& a, const FunctionalSample& b) {
    if (!(a.grid() == b.grid())) {
        throw validation_error("samples are defined on different grids; re-sampling is not performed");
    }
}

} // namespace fts
