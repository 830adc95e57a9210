#pragma once

#include <cstddef>
#include <vector>

#include "ftsdepth/sample.hpp"

namespace fts {

/// Functional boxplot built on corrected generalized band depth: deepest
/// curve, pointwise envelope of the central region, whisker fences, and
/// the curves leaving the fences anywhere.
struct BoxplotSummary {
    std::size_t median_index = 0;
    std::vector<double> central_lower;
    std::vector<double> central_upper;
    std::vector<double> fence_lower;
    std::vector<double> fence_upper;
    std::vector<std::size_t> outlier_indices;
};

/// central_prop selects the depth region (0.5 = the 50% deepest curves);
/// fences extend the envelope by factor times its pointwise range. An
/// infinite factor disables outlier flagging. Requires at least 4 curves.
BoxplotSummary functional_boxplot(const FunctionalSample& sample, double central_prop = 0.5,
                                  double factor = 1.5);

} // namespace fts
