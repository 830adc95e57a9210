#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ftsdepth/meboot.hpp"
#include "ftsdepth/sample.hpp"
#include "ftsdepth/wilcoxon.hpp"

namespace fts {

/// Moving-window configuration. Window starts are 1-based stream indices
/// k = 1, 1+step, ... with k + window_length - 1 <= stream size.
struct DetectorConfig {
    std::size_t window_length = 40;
    std::size_t step = 1;
    double beta = 1.0;
    RankScheme scheme = RankScheme::eq4_max;
    /// When set, every window gets a bootstrap p-value; the per-window
    /// stream is derived from (bootstrap->seed, window start).
    std::optional<MeBootConfig> bootstrap;
};

struct TraceEntry {
    std::size_t window_start = 0; // 1-based index into the stream
    double statistic = 0.0;
    std::optional<double> p_value;
};

struct DetectionTrace {
    std::vector<TraceEntry> entries;
    std::size_t reference_size = 0;
    std::size_t window_length = 0;
};

struct ChangeRule {
    double alpha = 0.05;
    std::size_t consecutive = 1;
};

struct ChangeReport {
    bool flagged = false;
    /// Window start (1-based stream index) of the first entry of the first
    /// qualifying run.
    std::optional<std::size_t> change_index;
    ChangeRule rule;
};

/// Tests every window of the stream against the fixed reference sample
/// with the locality-beta Wilcoxon statistic. Windows are independent and
/// evaluated in parallel; the trace is deterministic given inputs, config,
/// and seed.
DetectionTrace moving_wilcoxon(const FunctionalSample& reference, const FunctionalSample& stream,
                               const DetectorConfig& config);

/// Flags a change when `consecutive` successive trace entries all have
/// p < alpha; the reported index is the first entry of the first such run.
/// Requires p-values on every entry.
ChangeReport detect_change(const DetectionTrace& trace, double alpha, std::size_t consecutive);

} // namespace fts
