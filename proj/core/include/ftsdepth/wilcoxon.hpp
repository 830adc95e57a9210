#pragma once

#include <cstddef>
#include <optional>

#include "ftsdepth/depth.hpp"
#include "ftsdepth/meboot.hpp"
#include "ftsdepth/sample.hpp"

namespace fts {

enum class PValueMethod { none, normal_approx, bootstrap };

/// Two-sample rank-sum result over depth-induced ranks of the combined
/// sample; `statistic` is the sum of the ranks sitting at first-sample
/// positions.
struct WilcoxonResult {
    double statistic = 0.0;
    std::size_t n_first = 0;
    std::size_t n_second = 0;
    double beta = 1.0;
    RankScheme scheme = RankScheme::eq4_max;
    RankVector ranks;
    std::optional<double> p_value;
    PValueMethod p_method = PValueMethod::none;
};

/// The locality-beta Wilcoxon rank-sum statistic: both samples are pooled
/// (first-sample curves in positions 1..n_first), local depth at `beta` is
/// computed for every pooled curve, ranks follow `scheme`, and the
/// statistic sums the first sample's ranks. No p-value is attached.
WilcoxonResult local_wilcoxon(const FunctionalSample& first, const FunctionalSample& second,
                              double beta, RankScheme scheme = RankScheme::eq4_max);

/// Two-sided normal-approximation p-value with continuity correction and
/// the standard tie correction of the rank variance. Requires beta = 1 and
/// the mid-rank scheme; otherwise a validation error points to the
/// bootstrap. All-tied ranks (zero variance) give p = 1.
double normal_approx_pvalue(const WilcoxonResult& result);

/// Forces the replicate-by-replicate computation even where the shortcut
/// applies; used to validate the shortcut and for diagnostics.
enum class BootstrapPath { automatic, resample_each };

/// Statistic plus bootstrap p-value in one call (the bootstrap needs the
/// observed statistic anyway).
struct BootstrapOutcome {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Bootstrap p-value for the locality-beta Wilcoxon statistic.
///
/// The pooled series first||second is treated as a functional time series;
/// each replicate is a maximum entropy bootstrap resample of the whole
/// pooled series, re-split at a derived random circular offset into a
/// contiguous first block and its complement, sizes preserved. The offset
/// randomization carries the null variation: maximum entropy replicates
/// preserve within-coordinate ranks, and depth-induced ranks are functions
/// of those, so a fixed-position resplit would reproduce the observed
/// statistic identically. Circular blocks keep the time-adjacency of the
/// pooled series, so serial dependence widens the resampled distribution
/// the way it widens the observed statistic. Two-sided p-value counts
/// replicates at least as far from the replicate median as the observed
/// statistic, with the (1 + count) / (B + 1) correction.
///
/// Requires config.replicates >= 100 and samples on one grid.
BootstrapOutcome bootstrap_test(const FunctionalSample& first, const FunctionalSample& second,
                                double beta, RankScheme scheme, const MeBootConfig& config,
                                BootstrapPath path = BootstrapPath::automatic);

double bootstrap_pvalue(const FunctionalSample& first, const FunctionalSample& second,
                        double beta, RankScheme scheme, const MeBootConfig& config,
                        BootstrapPath path = BootstrapPath::automatic);

/// local_wilcoxon with the p-value attached: bootstrap when a config is
/// given, else the normal approximation when its preconditions hold
/// (beta = 1, mid-rank), else no p-value.
WilcoxonResult local_wilcoxon_test(const FunctionalSample& first, const FunctionalSample& second,
                                   double beta, RankScheme scheme,
                                   const std::optional<MeBootConfig>& bootstrap);

} // namespace fts
