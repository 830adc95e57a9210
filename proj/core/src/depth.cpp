#include "ftsdepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/parallel.hpp"

namespace fts {

namespace {

// Branch-ordered pair list: for each pair {i1, i2} (i1 < i2) the curve that
// delimits the band from below on the coherently ordered part of the
// domain. The ordering with L >= 1/2 wins; at an exact tie the (i1, i2)
// orientation is kept.
struct PairTable {
    std::vector<std::uint32_t> lo;
    std::vector<std::uint32_t> hi;
};

PairTable build_pair_table(const FunctionalSample& sample) {
    const std::size_t n = sample.size();
    const std::size_t p = sample.n_points();
    const auto w = sample.grid().weights();
    const double half_lambda = 0.5 * sample.grid().length();

    PairTable table;
    table.lo.reserve(n * (n - 1) / 2);
    table.hi.reserve(n * (n - 1) / 2);
    for (std::size_t i1 = 0; i1 + 1 < n; ++i1) {
        const double* a = sample.curve(i1).values.data();
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
            const double* b = sample.curve(i2).values.data();
            // Sequential sum: the branch decision sits on an exact >= 1/2
            // comparison and must not depend on accumulation order.
            double measure = 0.0;
            for (std::size_t t = 0; t < p; ++t) {
                measure += (b[t] - a[t] >= 0.0) ? w[t] : 0.0;
            }
            if (measure >= half_lambda) {
                table.lo.push_back(static_cast<std::uint32_t>(i1));
                table.hi.push_back(static_cast<std::uint32_t>(i2));
            } else {
                table.lo.push_back(static_cast<std::uint32_t>(i2));
                table.hi.push_back(static_cast<std::uint32_t>(i1));
            }
        }
    }
    return table;
}

// Measure of {t : lo(t) <= x(t) <= hi(t)}; points where the pair is
// inverted contribute nothing because the two inequalities cannot both
// hold there. Four accumulator lanes keep the loop vectorizable.
double overlap_measure(const double* x, const double* lo, const double* hi, const double* w,
                       std::size_t p) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    std::size_t t = 0;
    for (; t + 4 <= p; t += 4) {
        a0 += (lo[t] <= x[t] && x[t] <= hi[t]) ? w[t] : 0.0;
        a1 += (lo[t + 1] <= x[t + 1] && x[t + 1] <= hi[t + 1]) ? w[t + 1] : 0.0;
        a2 += (lo[t + 2] <= x[t + 2] && x[t + 2] <= hi[t + 2]) ? w[t + 2] : 0.0;
        a3 += (lo[t + 3] <= x[t + 3] && x[t + 3] <= hi[t + 3]) ? w[t + 3] : 0.0;
    }
    for (; t < p; ++t) {
        a0 += (lo[t] <= x[t] && x[t] <= hi[t]) ? w[t] : 0.0;
    }
    return (a0 + a1) + (a2 + a3);
}

double depth_of_values(const double* x, const FunctionalSample& sample, const PairTable& table) {
    const std::size_t p = sample.n_points();
    const double* w = sample.grid().weights().data();
    double acc = 0.0;
    for (std::size_t k = 0; k < table.lo.size(); ++k) {
        const double* lo = sample.curve(table.lo[k]).values.data();
        const double* hi = sample.curve(table.hi[k]).values.data();
        acc += overlap_measure(x, lo, hi, w, p);
    }
    const std::size_t n = sample.size();
    const double pair_count = static_cast<double>(n) * static_cast<double>(n - 1);
    return (2.0 * acc) / (sample.grid().length() * pair_count);
}

void require_depth_inputs(const Curve& x, const FunctionalSample& sample) {
    if (sample.size() < 2) {
        throw validation_error("band depth needs a sample of at least 2 curves, got " +
                               std::to_string(sample.size()));
    }
    if (x.values.size() != sample.n_points()) {
        throw validation_error("curve has " + std::to_string(x.values.size()) +
                               " values but the sample grid has " + std::to_string(sample.n_points()) +
                               " points");
    }
}

void require_beta(double beta) {
    if (!(beta > 0.0) || beta > 1.0) {
        throw validation_error("locality level beta must lie in (0, 1], got " + std::to_string(beta));
    }
}

// Smallest count k with k >= beta*n; the epsilon absorbs the rounding of
// products like 0.2 * 5 that land one ulp above an integer.
std::size_t region_count(double beta, std::size_t n) {
    const double target = beta * static_cast<double>(n);
    auto k = static_cast<std::size_t>(std::ceil(target - 1e-12));
    if (k < 1) k = 1;
    if (k > n) k = n;
    return k;
}

FunctionalSample symmetrized_sample(const Curve& x, const FunctionalSample& sample) {
    const std::size_t n = sample.size();
    const std::size_t p = sample.n_points();
    std::vector<Curve> curves;
    curves.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) curves.push_back(sample.curve(i));
    for (std::size_t i = 0; i < n; ++i) {
        Curve reflected;
        reflected.values.resize(p);
        const double* orig = sample.curve(i).values.data();
        for (std::size_t t = 0; t < p; ++t) {
            reflected.values[t] = 2.0 * x.values[t] - orig[t];
        }
        curves.push_back(std::move(reflected));
    }
    return FunctionalSample(sample.grid(), std::move(curves));
}

} // namespace

double cgbd(const Curve& x, const FunctionalSample& sample) {
    require_depth_inputs(x, sample);
    const PairTable table = build_pair_table(sample);
    return depth_of_values(x.values.data(), sample, table);
}

DepthVector cgbd_all(const FunctionalSample& sample) {
    if (sample.size() < 2) {
        throw validation_error("band depth needs a sample of at least 2 curves, got " +
                               std::to_string(sample.size()));
    }
    const PairTable table = build_pair_table(sample);
    DepthVector out;
    out.beta = 1.0;
    out.values.resize(sample.size());
    parallel::parallel_for(sample.size(), [&](std::size_t l) {
        out.values[l] = depth_of_values(sample.curve(l).values.data(), sample, table);
    });
    return out;
}

std::vector<std::size_t> depth_region(const DepthVector& depths, double beta) {
    require_beta(beta);
    const std::size_t n = depths.values.size();
    if (n == 0) throw validation_error("depth_region needs a nonempty depth vector");

    const std::size_t k = region_count(beta, n);
    std::vector<double> sorted = depths.values;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     sorted.end(), std::greater<double>());
    const double cutoff = sorted[k - 1];

    std::vector<std::size_t> region;
    region.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (depths.values[i] >= cutoff) region.push_back(i);
    }
    return region;
}

double local_cgbd(const Curve& x, const FunctionalSample& sample, double beta,
                  bool force_symmetrized) {
    require_beta(beta);
    require_depth_inputs(x, sample);
    if (beta == 1.0 && !force_symmetrized) {
        return cgbd(x, sample);
    }

    const FunctionalSample sym = symmetrized_sample(x, sample);
    const DepthVector sym_depths = cgbd_all(sym);
    const std::vector<std::size_t> region = depth_region(sym_depths, beta);
    if (region.size() < 2) return 0.0;
    const FunctionalSample retained = sym.subset(region);
    return cgbd(x, retained);
}

DepthVector local_cgbd_all(const FunctionalSample& sample, double beta, bool force_symmetrized) {
    require_beta(beta);
    if (sample.size() < 2) {
        throw validation_error("band depth needs a sample of at least 2 curves, got " +
                               std::to_string(sample.size()));
    }
    DepthVector out;
    out.beta = beta;
    out.values.resize(sample.size());
    parallel::parallel_for(sample.size(), [&](std::size_t l) {
        out.values[l] = local_cgbd(sample.curve(l), sample, beta, force_symmetrized);
    });
    return out;
}

RankVector ranks(const DepthVector& depths, RankScheme scheme) {
    const std::size_t n = depths.values.size();
    if (n == 0) throw validation_error("ranks need a nonempty depth vector");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return depths.values[a] < depths.values[b];
    });

    RankVector out;
    out.scheme = scheme;
    out.ranks.resize(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && depths.values[order[j + 1]] == depths.values[order[i]]) ++j;
        // Tie group occupies 1-based positions [i+1, j+1].
        const double value = scheme == RankScheme::eq4_max
                                 ? static_cast<double>(j + 1)
                                 : 0.5 * static_cast<double>((i + 1) + (j + 1));
        for (std::size_t k = i; k <= j; ++k) out.ranks[order[k]] = value;
        i = j + 1;
    }
    return out;
}

} // namespace fts
