#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ftsdepth/sample.hpp"

namespace fts {

/// Tuning knobs for the maximum entropy bootstrap.
struct MeBootConfig {
    /// Trimming proportion (each side) for the mean absolute first
    /// difference that widens the support beyond the sample extremes.
    double trim = 0.10;
    /// Number of replicates to generate.
    std::size_t replicates = 1;
    /// Seed for the derived per-replicate / per-coordinate streams.
    std::uint64_t seed = 0;
};

/// One maximum entropy bootstrap replicate of a scalar series.
///
/// The replicate is drawn from the piecewise-uniform density spanned by
/// the order-statistic midpoints (mean-adjusted per interval so interval
/// means match the 0.75/0.25 weighting of neighboring order statistics)
/// and is then rearranged so its ranks equal the input's ranks, ties
/// resolved by stable ordering. Consumes exactly series.size() uniforms
/// from `eng`, in index order.
///
/// A constant series is returned unchanged.
std::vector<double> meboot_scalar(std::span<const double> series, const MeBootConfig& config,
                                  std::mt19937_64& eng);

/// Coordinatewise extension to a functional time series: curve index is
/// time, and for every grid point j the scalar series of j-th coordinates
/// is resampled independently with the stream derived from
/// (config.seed, replicate, j). Returns config.replicates samples with the
/// input's grid, curve count, and labels.
std::vector<FunctionalSample> meboot_fts(const FunctionalSample& sample,
                                         const MeBootConfig& config);

namespace detail {

/// Quantile nodes z_0 <= z_1 <= ... <= z_n of the maximum entropy density:
/// midpoints of consecutive order statistics, extended at both ends by the
/// trimmed mean absolute first difference of the (unsorted) series.
std::vector<double> meboot_quantile_nodes(std::span<const double> series, double trim);

} // namespace detail

} // namespace fts
