#include "cvtele/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"

namespace cvtele {

namespace {

constexpr double kPi = std::numbers::pi;

// Kernel weights K[j + n - 1] for integer offsets j in (-(n-1), n-1).
std::vector<double> smoothing_kernel(std::size_t n, double spacing, double variance) {
    std::vector<double> kernel(2 * n - 1, 0.0);
    const auto centre = static_cast<std::ptrdiff_t>(n) - 1;
    if (variance == 0.0) {
        kernel[centre] = 1.0;
        return kernel;
    }
    // Fourier transform of the Gaussian at the grid Nyquist frequency is
    // exp(-c pi^2); past c = 4 the band-limited and sampled kernels agree to
    // double precision.
    const double c = variance / (2.0 * spacing * spacing);
    if (c > 4.0) {
        const double norm = spacing / std::sqrt(2.0 * kPi * variance);
        for (std::ptrdiff_t j = -centre; j <= centre; ++j) {
            const double x = static_cast<double>(j) * spacing;
            kernel[j + centre] = norm * std::exp(-x * x / (2.0 * variance));
        }
        return kernel;
    }
    // K_j = (1/pi) int_0^pi exp(-c t^2) cos(j t) dt, composite Gauss-Legendre.
    const std::size_t panels = std::max<std::size_t>(64, 2 * n);
    const QuadratureRule unit = gauss_legendre(8, 0.0, 1.0);
    const double width = kPi / static_cast<double>(panels);
    std::vector<double> t, w;
    t.reserve(panels * 8);
    w.reserve(panels * 8);
    for (std::size_t p = 0; p < panels; ++p) {
        for (int q = 0; q < unit.order; ++q) {
            const double tt = (static_cast<double>(p) + unit.nodes[q]) * width;
            t.push_back(tt);
            w.push_back(unit.weights[q] * width * std::exp(-c * tt * tt) / kPi);
        }
    }
    for (std::ptrdiff_t j = 0; j <= centre; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            s += w[k] * std::cos(static_cast<double>(j) * t[k]);
        }
        kernel[centre + j] = s;
        kernel[centre - j] = s;
    }
    return kernel;
}

}  // namespace

void GaussianOneMode::validate() const {
    if (!(var_r > 0.0) || !(var_i > 0.0)) {
        throw ConfigurationError("Gaussian variances must be positive");
    }
    if (var_r * var_i < 1.0 / 16.0 - 1e-15) {
        throw ConfigurationError("Gaussian violates the uncertainty bound var_r * var_i >= 1/16");
    }
}

std::array<double, 3> GaussianOneMode::covariance() const {
    const double c = std::cos(orientation);
    const double s = std::sin(orientation);
    return {c * c * var_r + s * s * var_i, c * s * (var_r - var_i), s * s * var_r + c * c * var_i};
}

double GaussianOneMode::wigner(Complex alpha) const {
    const auto [crr, cri, cii] = covariance();
    const double det = crr * cii - cri * cri;
    const double dr = alpha.real() - mean.real();
    const double di = alpha.imag() - mean.imag();
    const double q = (cii * dr * dr - 2.0 * cri * dr * di + crr * di * di) / det;
    return std::exp(-0.5 * q) / (2.0 * kPi * std::sqrt(det));
}

WignerGrid GaussianOneMode::to_grid(const GridSpec& spec) const {
    validate();
    return WignerGrid::sample(spec, 0.0, true, [this](Complex a) { return wigner(a); });
}

double band_limit(const GridSpec& spec) {
    return kPi * static_cast<double>(spec.resolution) / (2.0 * spec.extent);
}

WignerGrid gaussian_smooth(const WignerGrid& g, double variance_per_axis) {
    if (!(variance_per_axis >= 0.0) || !std::isfinite(variance_per_axis)) {
        throw DomainError("smoothing variance must be non-negative");
    }
    const std::size_t n = g.resolution();
    const auto kernel = smoothing_kernel(n, g.spec().spacing(), variance_per_axis);
    const std::size_t centre = n - 1;

    std::vector<double> tmp(n * n, 0.0);
    for (std::size_t ir = 0; ir < n; ++ir) {
        double* row = &tmp[ir * n];
        for (std::size_t j = 0; j < n; ++j) {
            const double k = kernel[centre + ir - j];
            if (k == 0.0) continue;
            const double* src = &g.values()[j * n];
            for (std::size_t ii = 0; ii < n; ++ii) row[ii] += k * src[ii];
        }
    }
    WignerGrid out(g.spec(), g.sigma(), g.pure_origin());
    for (std::size_t ir = 0; ir < n; ++ir) {
        const double* src = &tmp[ir * n];
        for (std::size_t ii = 0; ii < n; ++ii) {
            const double* k = &kernel[centre + ii];
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += *(k - j) * src[j];
            out.at(ir, ii) = s;
        }
    }
    return out;
}

WignerGrid convert_sigma(const WignerGrid& g, double sigma_to) {
    if (!(sigma_to >= -1.0 && sigma_to <= 1.0)) {
        throw ConfigurationError("target sigma must lie in [-1, 1]");
    }
    if (sigma_to > g.sigma()) {
        throw UnsupportedDeconvolution("cannot sharpen a sampled quasiprobability from sigma=" +
                                       std::to_string(g.sigma()) + " to " + std::to_string(sigma_to) +
                                       "; use the analytic Gaussian path");
    }
    WignerGrid out = gaussian_smooth(g, (g.sigma() - sigma_to) / 4.0);
    out.relabel_sigma(sigma_to);
    return out;
}

Complex characteristic(const WignerGrid& g, Complex xi) {
    if (std::abs(xi) > band_limit(g.spec())) {
        throw AccuracyError("|xi| = " + std::to_string(std::abs(xi)) + " exceeds the grid band limit " +
                            std::to_string(band_limit(g.spec())));
    }
    // xi alpha* - xi* alpha = 2i (xi_i alpha_r - xi_r alpha_i)
    const std::size_t n = g.resolution();
    std::vector<Complex> phase_r(n), phase_i(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = g.spec().coordinate(k);
        const double edge = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
        phase_r[k] = edge * std::polar(1.0, 2.0 * xi.imag() * x);
        phase_i[k] = edge * std::polar(1.0, -2.0 * xi.real() * x);
    }
    Complex total = 0.0;
    for (std::size_t ir = 0; ir < n; ++ir) {
        Complex row = 0.0;
        for (std::size_t ii = 0; ii < n; ++ii) row += phase_i[ii] * g.at(ir, ii);
        total += phase_r[ir] * row;
    }
    return total * g.spec().cell_area();
}

Complex characteristic(const GaussianOneMode& g, Complex xi, double sigma) {
    const auto [crr, cri, cii] = g.covariance();
    const double kr = 2.0 * xi.imag();
    const double ki = -2.0 * xi.real();
    const double shift = -sigma / 4.0;
    const double quad = (crr + shift) * kr * kr + 2.0 * cri * kr * ki + (cii + shift) * ki * ki;
    const double phase = kr * g.mean.real() + ki * g.mean.imag();
    return std::exp(-0.5 * quad) * std::polar(1.0, phase);
}

}  // namespace cvtele
