#include "ftsdepth/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftsdepth/errors.hpp"
#include "ftsdepth/parallel.hpp"

namespace fts {

namespace {

// In-place Cholesky solve of the SPD system G x = b.
void cholesky_solve(std::vector<double>& g, std::vector<double>& b, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = g[i * k + j];
            for (std::size_t m = 0; m < j; ++m) sum -= g[i * k + m] * g[j * k + m];
            if (i == j) {
                if (sum <= 0.0) {
                    throw std::runtime_error("Fourier normal equations are not positive definite");
                }
                g[i * k + j] = std::sqrt(sum);
            } else {
                g[i * k + j] = sum / g[j * k + j];
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        double sum = b[i];
        for (std::size_t m = 0; m < i; ++m) sum -= g[i * k + m] * b[m];
        b[i] = sum / g[i * k + i];
    }
    for (std::size_t ii = k; ii-- > 0;) {
        double sum = b[ii];
        for (std::size_t m = ii + 1; m < k; ++m) sum -= g[m * k + ii] * b[m];
        b[ii] = sum / g[ii * k + ii];
    }
}

} // namespace

FunctionalSample fourier_smooth(const FunctionalSample& sample, std::size_t n_basis) {
    const std::size_t p = sample.n_points();
    if (n_basis % 2 == 0 || n_basis == 0) {
        throw validation_error("the Fourier basis size must be odd, got " + std::to_string(n_basis));
    }
    if (n_basis > p) {
        throw validation_error("the Fourier basis size " + std::to_string(n_basis) +
                               " exceeds the grid size " + std::to_string(p));
    }

    const Grid& grid = sample.grid();
    const double period = grid.length();
    const std::size_t k = n_basis;
    constexpr double two_pi = 6.283185307179586476925286766559;

    // Basis matrix, point-major: phi[t*k + j].
    std::vector<double> phi(p * k);
    for (std::size_t t = 0; t < p; ++t) {
        phi[t * k] = 1.0;
        for (std::size_t h = 1; 2 * h < k; ++h) {
            const double arg = two_pi * static_cast<double>(h) * grid.point(t) / period;
            phi[t * k + 2 * h - 1] = std::sin(arg);
            phi[t * k + 2 * h] = std::cos(arg);
        }
    }

    // Weighted Gram matrix.
    std::vector<double> gram(k * k, 0.0);
    for (std::size_t t = 0; t < p; ++t) {
        const double w = grid.weight(t);
        const double* row = phi.data() + t * k;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                gram[i * k + j] += w * row[i] * row[j];
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) gram[i * k + j] = gram[j * k + i];
    }

    std::vector<Curve> fitted(sample.size());
    parallel::parallel_for(sample.size(), [&](std::size_t c) {
        const auto& y = sample.curve(c).values;
        std::vector<double> rhs(k, 0.0);
        for (std::size_t t = 0; t < p; ++t) {
            const double wy = grid.weight(t) * y[t];
            const double* row = phi.data() + t * k;
            for (std::size_t j = 0; j < k; ++j) rhs[j] += wy * row[j];
        }
        std::vector<double> chol = gram;
        cholesky_solve(chol, rhs, k);

        fitted[c].values.resize(p);
        for (std::size_t t = 0; t < p; ++t) {
            const double* row = phi.data() + t * k;
            double acc = 0.0;
            for (std::size_t j = 0; j < k; ++j) acc += row[j] * rhs[j];
            fitted[c].values[t] = acc;
        }
    });

    return FunctionalSample(grid, std::move(fitted), sample.labels());
}

} // namespace fts
