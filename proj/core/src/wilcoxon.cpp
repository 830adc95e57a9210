#include "ftsdepth/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/parallel.hpp"
#include "ftsdepth/rng.hpp"

namespace fts {

namespace {

double rank_sum_at(const std::vector<double>& rank_values, const std::vector<std::size_t>& positions) {
    double s = 0.0;
    for (std::size_t i : positions) s += rank_values[i];
    return s;
}

// Positions assigned to the first sample in replicate b: the pooled time
// circle is rotated by a random offset, cut into consecutive blocks of
// length ~sqrt(n), the blocks are shuffled, and the first n_first
// positions of the shuffled order are taken. Blocks keep short-range
// serial dependence inside the resampled splits (a fully random
// relabeling would understate the null spread for dependent streams)
// while the shuffle still breaks the alignment a real change sits on.
std::vector<std::size_t> random_first_positions(std::uint64_t seed, std::size_t b, std::size_t n,
                                                std::size_t n_first) {
    auto eng = rng::stream(seed, b, 0, 1);
    const std::size_t offset = rng::uniform_index(eng, n);

    const auto block = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::size_t n_blocks = (n + block - 1) / block;
    std::vector<std::size_t> order(n_blocks);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i + 1 < n_blocks; ++i) {
        const std::size_t j = i + rng::uniform_index(eng, n_blocks - i);
        std::swap(order[i], order[j]);
    }

    std::vector<std::size_t> idx;
    idx.reserve(n_first);
    for (std::size_t bi = 0; bi < n_blocks && idx.size() < n_first; ++bi) {
        const std::size_t start = order[bi] * block;
        const std::size_t stop = std::min(start + block, n);
        for (std::size_t k = start; k < stop && idx.size() < n_first; ++k) {
            idx.push_back((offset + k) % n);
        }
    }
    return idx;
}

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (n % 2 == 0) {
        const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
        m = 0.5 * (lower + m);
    }
    return m;
}

// How a coordinate series behaves under rank-preserving resampling.
enum class CoordinateKind {
    constant,       // replicates reproduce it exactly, ties stay ties
    deterministic,  // distinct replicate values in stable-tie order
    random_ties     // flat quantile segments: tie pattern varies by draw
};

CoordinateKind classify_coordinate(std::span<const double> series, double trim) {
    const double first = series[0];
    bool constant = true;
    bool has_tie = false;
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i] != first) constant = false;
    }
    if (constant) return CoordinateKind::constant;

    std::vector<double> sorted(series.begin(), series.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) has_tie = true;
    }
    if (!has_tie) return CoordinateKind::deterministic;

    const std::vector<double> z = detail::meboot_quantile_nodes(series, trim);
    for (std::size_t i = 1; i < z.size(); ++i) {
        if (!(z[i] > z[i - 1])) return CoordinateKind::random_ties;
    }
    return CoordinateKind::deterministic;
}

struct ReplicateStructure {
    bool ranks_shared = false;      // one rank vector serves all replicates
    bool matches_original = false;  // and it equals the original's
};

ReplicateStructure analyze_replicates(const FunctionalSample& pooled, double trim) {
    ReplicateStructure s;
    s.ranks_shared = true;
    s.matches_original = true;
    std::vector<double> series(pooled.size());
    for (std::size_t j = 0; j < pooled.n_points(); ++j) {
        for (std::size_t i = 0; i < pooled.size(); ++i) series[i] = pooled.curve(i).values[j];
        switch (classify_coordinate(series, trim)) {
        case CoordinateKind::constant:
            break;
        case CoordinateKind::deterministic: {
            // Shared, but a broken tie changes comparisons vs. the original.
            std::vector<double> sorted = series;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 1; i < sorted.size(); ++i) {
                if (sorted[i] == sorted[i - 1]) s.matches_original = false;
            }
            break;
        }
        case CoordinateKind::random_ties:
            s.ranks_shared = false;
            s.matches_original = false;
            return s;
        }
    }
    return s;
}

// Comparison-equivalent stand-in for any replicate of the pooled sample:
// constant coordinates stay tied, every other coordinate is replaced by
// its stable-tie-broken order.
FunctionalSample replicate_surrogate(const FunctionalSample& pooled) {
    const std::size_t n = pooled.size();
    const std::size_t p = pooled.n_points();
    std::vector<Curve> curves(n);
    for (std::size_t i = 0; i < n; ++i) curves[i].values.resize(p);

    std::vector<double> series(n);
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < n; ++i) series[i] = pooled.curve(i).values[j];
        const double first = series[0];
        bool constant = true;
        for (std::size_t i = 1; i < n; ++i) {
            if (series[i] != first) constant = false;
        }
        if (constant) {
            for (std::size_t i = 0; i < n; ++i) curves[i].values[j] = 0.0;
            continue;
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return series[a] < series[b]; });
        for (std::size_t k = 0; k < n; ++k) {
            curves[order[k]].values[j] = static_cast<double>(k);
        }
    }
    return FunctionalSample(pooled.grid(), std::move(curves));
}

} // namespace

WilcoxonResult local_wilcoxon(const FunctionalSample& first, const FunctionalSample& second,
                              double beta, RankScheme scheme) {
    require_same_grid(first, second);
    if (first.size() + second.size() < 2) {
        throw validation_error("the combined sample needs at least 2 curves");
    }

    const FunctionalSample combined = concatenate(first, second);
    const DepthVector depths = local_cgbd_all(combined, beta);
    RankVector rk = ranks(depths, scheme);

    WilcoxonResult result;
    result.n_first = first.size();
    result.n_second = second.size();
    result.beta = beta;
    result.scheme = scheme;
    result.statistic =
        std::accumulate(rk.ranks.begin(), rk.ranks.begin() + static_cast<std::ptrdiff_t>(first.size()), 0.0);
    result.ranks = std::move(rk);
    return result;
}

double normal_approx_pvalue(const WilcoxonResult& result) {
    if (result.beta != 1.0) {
        throw validation_error("the normal approximation applies at beta = 1 only; "
                               "use the bootstrap p-value for local beta");
    }
    if (result.scheme != RankScheme::mid_rank) {
        throw validation_error("the normal approximation needs mid-ranks; "
                               "recompute the statistic with the mid-rank scheme");
    }
    const auto n1 = static_cast<double>(result.n_first);
    const auto n2 = static_cast<double>(result.n_second);
    const double n = n1 + n2;

    // Tie groups are recoverable from the ranks: mid-ranks are equal
    // exactly within a tie group.
    std::map<double, std::size_t> groups;
    for (double r : result.ranks.ranks) ++groups[r];
    double tie_sum = 0.0;
    for (const auto& [rank, count] : groups) {
        const auto t = static_cast<double>(count);
        tie_sum += t * t * t - t;
    }

    const double mu = n1 * (n + 1.0) / 2.0;
    double var = n1 * n2 * (n + 1.0) / 12.0;
    if (n > 1.0) var -= n1 * n2 * tie_sum / (12.0 * n * (n - 1.0));
    if (var <= 0.0) return 1.0;

    double diff = std::abs(result.statistic - mu) - 0.5;
    if (diff < 0.0) diff = 0.0;
    const double z = diff / std::sqrt(var);
    const double p = std::erfc(z / std::sqrt(2.0));
    return std::min(p, 1.0);
}

BootstrapOutcome bootstrap_test(const FunctionalSample& first, const FunctionalSample& second,
                                double beta, RankScheme scheme, const MeBootConfig& config,
                                BootstrapPath path) {
    if (config.replicates < 100) {
        throw validation_error("bootstrap needs at least 100 replicates, got " +
                               std::to_string(config.replicates));
    }
    require_same_grid(first, second);

    const WilcoxonResult observed = local_wilcoxon(first, second, beta, scheme);
    const FunctionalSample pooled = concatenate(first, second);
    const std::size_t n = pooled.size();
    const std::size_t n1 = first.size();
    const std::size_t B = config.replicates;

    std::vector<double> stats(B);

    bool shortcut = false;
    if (beta == 1.0 && path == BootstrapPath::automatic) {
        const ReplicateStructure structure = analyze_replicates(pooled, config.trim);
        if (structure.ranks_shared) {
            std::vector<double> shared_ranks;
            if (structure.matches_original) {
                shared_ranks = observed.ranks.ranks;
            } else {
                const DepthVector d = cgbd_all(replicate_surrogate(pooled));
                shared_ranks = ranks(d, scheme).ranks;
            }
            parallel::parallel_for(B, [&](std::size_t b) {
                stats[b] = rank_sum_at(shared_ranks, random_first_positions(config.seed, b, n, n1));
            });
            shortcut = true;
        }
    }

    if (!shortcut) {
        const std::vector<FunctionalSample> reps = meboot_fts(pooled, config);
        parallel::parallel_for(B, [&](std::size_t b) {
            const DepthVector d = local_cgbd_all(reps[b], beta);
            const RankVector rk = ranks(d, scheme);
            stats[b] = rank_sum_at(rk.ranks, random_first_positions(config.seed, b, n, n1));
        });
    }

    const double med = median_of(stats);
    const double observed_dev = std::abs(observed.statistic - med);
    std::size_t count = 0;
    for (double s : stats) {
        if (std::abs(s - med) >= observed_dev) ++count;
    }

    BootstrapOutcome outcome;
    outcome.statistic = observed.statistic;
    outcome.p_value = static_cast<double>(1 + count) / static_cast<double>(B + 1);
    return outcome;
}

double bootstrap_pvalue(const FunctionalSample& first, const FunctionalSample& second, double beta,
                        RankScheme scheme, const MeBootConfig& config, BootstrapPath path) {
    return bootstrap_test(first, second, beta, scheme, config, path).p_value;
}

WilcoxonResult local_wilcoxon_test(const FunctionalSample& first, const FunctionalSample& second,
                                   double beta, RankScheme scheme,
                                   const std::optional<MeBootConfig>& bootstrap) {
    WilcoxonResult result = local_wilcoxon(first, second, beta, scheme);
    if (bootstrap.has_value()) {
        result.p_value = bootstrap_pvalue(first, second, beta, scheme, *bootstrap);
        result.p_method = PValueMethod::bootstrap;
    } else if (beta == 1.0 && scheme == RankScheme::mid_rank) {
        result.p_value = normal_approx_pvalue(result);
        result.p_method = PValueMethod::normal_approx;
    }
    return result;
}

} // namespace fts
