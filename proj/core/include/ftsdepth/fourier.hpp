#pragma once

#include <cstddef>

#include "ftsdepth/sample.hpp"

namespace fts {

/// Least-squares projection of every curve onto the truncated Fourier
/// basis {1, sin(2*pi*k*t/T), cos(2*pi*k*t/T), k = 1..(n_basis-1)/2} with
/// T the grid span, fitted under the grid's quadrature weights and
/// evaluated back on the same grid. n_basis must be odd and no larger
/// than the number of grid points. Idempotent for a fixed n_basis.
FunctionalSample fourier_smooth(const FunctionalSample& sample, std::size_t n_basis);

} // namespace fts
