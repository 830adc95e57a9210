#pragma once

#include <cstddef>
#include <vector>

#include "ftsdepth/sample.hpp"

namespace fts {

/// Tie handling for depth-induced ranks: `eq4_max` gives every member of a
/// tie group the maximal rank (the count of depths less than or equal to
/// its own); `mid_rank` gives the tie group the average of the positions
/// it spans, as classical rank tests expect.
enum class RankScheme { eq4_max, mid_rank };

/// Per-curve depth values in [0, 1] together with the locality level they
/// were computed at (beta = 1 is global depth).
struct DepthVector {
    std::vector<double> values;
    double beta = 1.0;
};

/// Depth-induced ranks; `ranks` are integers under eq4_max and may be
/// half-integers under mid_rank.
struct RankVector {
    std::vector<double> ranks;
    RankScheme scheme = RankScheme::eq4_max;
};

/// Corrected generalized band depth of `x` with respect to `sample`.
///
/// For every pair of sample curves the domain is restricted to the part
/// where the pair is coherently ordered (weak inequality); the pair whose
/// ordering holds on at least half the domain delimits the band, and the
/// depth accumulates the measure of the restricted domain where
/// lo(t) <= x(t) <= hi(t), inclusive on both edges. Normalized to [0, 1].
///
/// Throws fts::validation_error if the sample has fewer than two curves or
/// `x` does not match the sample's grid size.
double cgbd(const Curve& x, const FunctionalSample& sample);

/// cgbd of every sample member against the full sample; entry l is exactly
/// cgbd(sample.curve(l), sample). Parallelizes over curves.
DepthVector cgbd_all(const FunctionalSample& sample);

/// Indices (ascending) of the smallest depth level set containing at least
/// a proportion `beta` of the curves: the ceil(beta*n) deepest plus every
/// curve tied with the cutoff depth.
std::vector<std::size_t> depth_region(const DepthVector& depths, double beta);

/// Locally corrected generalized band depth at locality level `beta`.
///
/// beta = 1 returns global cgbd unless `force_symmetrized` is set, in
/// which case the symmetrized construction below runs even at beta = 1.
/// For beta < 1: the sample is symmetrized through x (the 2n curves
/// x_1..x_n, 2x - x_1 .. 2x - x_n), the smallest depth region holding at
/// least a proportion beta of those 2n curves is retained, and the depth
/// of x is recomputed within the retained subsample. A retained subsample
/// with fewer than two curves yields depth 0.
double local_cgbd(const Curve& x, const FunctionalSample& sample, double beta,
                  bool force_symmetrized = false);

/// local_cgbd of every sample member; parallelizes over curves and is
/// deterministic regardless of schedule.
DepthVector local_cgbd_all(const FunctionalSample& sample, double beta,
                           bool force_symmetrized = false);

/// Ranks induced by a depth vector under the given tie scheme.
RankVector ranks(const DepthVector& depths, RankScheme scheme);

} // namespace fts
