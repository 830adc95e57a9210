#pragma once

#include <cstdint>

#include "ftsdepth/grid.hpp"
#include "ftsdepth/sample.hpp"

namespace fts {

/// Integral kernel of the FAR(1) operator X -> int psi(t, s) X(s) ds.
struct Far1Kernel {
    enum class Type { gaussian, constant };
    Type type = Type::gaussian;
    /// The multiplicative constant C in C*exp(-(t^2+s^2)/2) or the constant
    /// kernel value itself.
    double scale = 0.5;
};

enum class ErrorProcess { wiener, brownian_bridge };

struct Far1Config {
    Far1Kernel kernel;
    ErrorProcess error = ErrorProcess::wiener;
    std::size_t burn_in = 50;
};

struct CurveModel {
    enum class Kind { wiener, brownian_bridge };
    Kind kind = Kind::wiener;
    /// Constant added pointwise to every generated curve.
    double shift = 0.0;
};

/// Mixture of two curve models: each curve comes from component_b with
/// probability `contamination`, else from component_a. Labels record the
/// component ("a" / "b").
struct MixtureConfig {
    CurveModel component_a;
    CurveModel component_b;
    double contamination = 0.05;
};

/// n independent standard Wiener paths: value 0 at the first grid point,
/// independent Gaussian increments with variance equal to the spacing.
/// The grid must start at 0 unless `shift_origin` is set, in which case
/// the grid is treated as time since its first point.
FunctionalSample wiener_sample(std::size_t n, const Grid& grid, std::uint64_t seed,
                               bool shift_origin = false);

/// Brownian bridges B(t) = W(t) - (t/T) W(T) on a grid over [0, T]; both
/// endpoints are exactly 0. Curve i is the pathwise transform of curve i
/// of wiener_sample(n, grid, seed).
FunctionalSample brownian_bridge_sample(std::size_t n, const Grid& grid, std::uint64_t seed);

/// Operator norm of the kernel, sqrt of the double quadrature of psi^2.
double far1_kernel_norm(const Far1Kernel& kernel, const Grid& grid);

/// Scale C giving the Gaussian kernel the requested operator norm on this
/// grid.
double gaussian_kernel_scale_for_norm(const Grid& grid, double target_norm);

/// Functional autoregression of order one: X_{k+1}(t) = int psi(t,s) X_k(s) ds
/// + e_{k+1}(t) with quadrature for the integral, X_0 equal to the first
/// error draw and the first `burn_in` curves discarded. Rejects kernels
/// with operator norm >= 1. Output has exactly n curves.
FunctionalSample far1_sample(std::size_t n, const Grid& grid, const Far1Config& config,
                             std::uint64_t seed);

FunctionalSample mixture_sample(std::size_t n, const Grid& grid, const MixtureConfig& config,
                                std::uint64_t seed);

/// The 120- and 1440-point presets on [0, 1] (a day at 12- and 1-minute
/// resolution).
Grid preset_grid(std::size_t n_points);

} // namespace fts
