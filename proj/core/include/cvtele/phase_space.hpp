#pragma once

#include <array>

#include "cvtele/grid.hpp"

namespace cvtele {

// Single-mode Gaussian Wigner function described by its mean and principal
// variances of (alpha_r, alpha_i), rotated by `orientation` radians.
// Vacuum has var_r = var_i = 1/4.
struct GaussianOneMode {
    Complex mean{0.0, 0.0};
    double var_r = 0.25;
    double var_i = 0.25;
    double orientation = 0.0;

    // Throws ConfigurationError unless both variances are positive and
    // var_r * var_i >= 1/16.
    void validate() const;

    // Covariance of (alpha_r, alpha_i) as {c_rr, c_ri, c_ii}.
    std::array<double, 3> covariance() const;

    double wigner(Complex alpha) const;

    WignerGrid to_grid(const GridSpec& spec) const;
};

// Largest |xi| a grid characteristic function is trusted for.
double band_limit(const GridSpec& spec);

// Convolution with a normalized isotropic Gaussian of the given variance per
// quadrature axis, in two separable passes. The 1D kernel is the band-limited
// (sinc-consistent) Gaussian, so kernels narrower than the grid spacing still
// act as the identity instead of aliasing.
WignerGrid gaussian_smooth(const WignerGrid& g, double variance_per_axis);

// R_sigma -> R_sigma_to for sigma_to <= g.sigma(): convolution with a
// Gaussian of variance (sigma - sigma_to)/4 per axis, i.e. (sigma - sigma_to)/2
// in |delta|^2. Throws UnsupportedDeconvolution for sigma_to > g.sigma().
WignerGrid convert_sigma(const WignerGrid& g, double sigma_to);

// C_sigma(xi) = int d^2 alpha exp(xi alpha* - xi* alpha) R_sigma(alpha) by
// trapezoidal quadrature. Throws AccuracyError beyond band_limit(spec).
Complex characteristic(const WignerGrid& g, Complex xi);

// Closed-form characteristic function of the sigma-ordered quasiprobability
// of a Gaussian state.
Complex characteristic(const GaussianOneMode& g, Complex xi, double sigma = 0.0);

}  // namespace cvtele
