#include "ftsdepth/detector.hpp"

#include <string>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/parallel.hpp"
#include "ftsdepth/rng.hpp"

namespace fts {

DetectionTrace moving_wilcoxon(const FunctionalSample& reference, const FunctionalSample& stream,
                               const DetectorConfig& config) {
    require_same_grid(reference, stream);
    if (reference.size() < 2) {
        throw validation_error("the reference sample needs at least 2 curves");
    }
    if (config.window_length < 2) {
        throw validation_error("window length must be at least 2, got " +
                               std::to_string(config.window_length));
    }
    if (config.step < 1) {
        throw validation_error("window step must be at least 1");
    }
    if (stream.size() < config.window_length) {
        throw validation_error("stream of " + std::to_string(stream.size()) +
                               " curves is shorter than the window length " +
                               std::to_string(config.window_length));
    }

    std::vector<std::size_t> starts;
    for (std::size_t k = 1; k + config.window_length - 1 <= stream.size(); k += config.step) {
        starts.push_back(k);
    }

    DetectionTrace trace;
    trace.reference_size = reference.size();
    trace.window_length = config.window_length;
    trace.entries.resize(starts.size());

    parallel::parallel_for(starts.size(), [&](std::size_t i) {
        const std::size_t k = starts[i];
        const FunctionalSample window = stream.slice(k - 1, config.window_length);
        TraceEntry entry;
        entry.window_start = k;
        if (config.bootstrap.has_value()) {
            MeBootConfig boot = *config.bootstrap;
            boot.seed = rng::derive(boot.seed, 0x77u, k);
            const BootstrapOutcome outcome =
                bootstrap_test(reference, window, config.beta, config.scheme, boot);
            entry.statistic = outcome.statistic;
            entry.p_value = outcome.p_value;
        } else {
            entry.statistic = local_wilcoxon(reference, window, config.beta, config.scheme).statistic;
        }
        trace.entries[i] = entry;
    });
    return trace;
}

ChangeReport detect_change(const DetectionTrace& trace, double alpha, std::size_t consecutive) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw validation_error("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    if (consecutive < 1) {
        throw validation_error("the run rule needs at least 1 consecutive window");
    }
    for (const TraceEntry& entry : trace.entries) {
        if (!entry.p_value.has_value()) {
            throw validation_error("trace entries carry no p-values; "
                                   "rerun the detector with a bootstrap configuration");
        }
    }

    ChangeReport report;
    report.rule = ChangeRule{alpha, consecutive};
    std::size_t run = 0;
    for (std::size_t i = 0; i < trace.entries.size(); ++i) {
        if (*trace.entries[i].p_value < alpha) {
            ++run;
            if (run >= consecutive) {
                report.flagged = true;
                report.change_index = trace.entries[i - (consecutive - 1)].window_start;
                return report;
            }
        } else {
            run = 0;
        }
    }
    return report;
}

} // namespace fts
