#include "cvtele/teleport.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"
#include "cvtele/phase_space.hpp"

namespace cvtele {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_noise(double n_tau) {
    if (!(n_tau > 0.0) || !std::isfinite(n_tau)) {
        throw DomainError(fmt::format("noise factor must be positive, got {}", n_tau));
    }
}

void require_kernel_fits(double variance_per_axis, const GridSpec& spec) {
    if (4.0 * std::sqrt(variance_per_axis) > spec.extent) {
        throw AccuracyError(fmt::format("kernel width {} exceeds what grid extent {} can hold",
                                        std::sqrt(variance_per_axis), spec.extent));
    }
}

}  // namespace

double kernel_value(const TeleportKernel& k, Complex delta) {
    require_positive_noise(k.n_tau);
    return std::exp(-std::norm(delta) / k.n_tau) / (kPi * k.n_tau);
}

WignerGrid teleport_state(const WignerGrid& w_o, double n_tau) {
    if (w_o.sigma() != 0.0) throw ConfigurationError("teleport_state expects a Wigner function (sigma = 0)");
    if (n_tau == 0.0) return w_o;
    require_positive_noise(n_tau);
    require_kernel_fits(n_tau / 2.0, w_o.spec());
    WignerGrid out = gaussian_smooth(w_o, n_tau / 2.0);
    out.set_pure_origin(false);
    return out;
}

WignerGrid teleport_state(const WignerGrid& w_o, NoiseFactor n_tau) { return teleport_state(w_o, n_tau.value); }

WignerGrid teleported_quasiprobability(const WignerGrid& w_o, double n_tau, double sigma) {
    if (w_o.sigma() != 0.0) throw ConfigurationError("expected a Wigner function (sigma = 0)");
    require_positive_noise(n_tau);
    const double effective = n_tau - sigma / 2.0;
    if (effective < 0.0) {
        throw DomainError(fmt::format("R_sigma with sigma={} is not a smooth function for n_tau={}", sigma, n_tau));
    }
    require_kernel_fits(effective / 2.0, w_o.spec());
    WignerGrid out = gaussian_smooth(w_o, effective / 2.0);
    out.relabel_sigma(sigma);
    out.set_pure_origin(false);
    return out;
}

double teleported_fock_value(int m, double n_tau, Complex alpha) {
    if (m < 0) throw DomainError("Fock number must be non-negative");
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    const double r2 = std::norm(alpha);
    const double up = 2.0 * n_tau + 1.0;
    const double down = 2.0 * n_tau - 1.0;
    const double envelope = 2.0 / kPi * std::exp(-2.0 * r2 / up);
    if (std::abs(down) >= 1e-6) {
        return envelope * std::pow(down, m) / std::pow(up, m + 1) * laguerre(m, -4.0 * r2 / (up * down));
    }
    // sum_k C(m,k) (4 r2)^k down^(m-k) / (k! up^(m+k+1))
    double sum = 0.0;
    double x_pow = 1.0;
    double factorial = 1.0;
    for (int k = 0; k <= m; ++k) {
        if (k > 0) {
            x_pow *= 4.0 * r2;
            factorial *= k;
        }
        sum += binomial(m, k) * x_pow * std::pow(down, m - k) / (factorial * std::pow(up, m + k + 1));
    }
    return envelope * sum;
}

WignerGrid teleported_fock_wigner(int m, double n_tau, const GridSpec& spec) {
    return WignerGrid::sample(spec, 0.0, n_tau == 0.0,
                              [m, n_tau](Complex a) { return teleported_fock_value(m, n_tau, a); });
}

double teleported_squeezed_value(double s_o, double n_tau, Complex alpha) {
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    const double a_plus = 2.0 * n_tau + std::exp(-2.0 * s_o);
    const double a_minus = 2.0 * n_tau + std::exp(2.0 * s_o);
    return 2.0 / (kPi * std::sqrt(a_plus * a_minus)) *
           std::exp(-2.0 / a_plus * alpha.real() * alpha.real() - 2.0 / a_minus * alpha.imag() * alpha.imag());
}

WignerGrid teleported_squeezed_wigner(double s_o, double n_tau, const GridSpec& spec) {
    spec.validate();
    const double widest = 2.0 * n_tau + std::exp(2.0 * std::abs(s_o));
    // Mass of the broad axis outside the window (std = sqrt(widest)/2).
    if (std::erfc(std::sqrt(2.0) * spec.extent / std::sqrt(widest)) > 1e-2) {
        throw ConfigurationError(fmt::format("grid extent {} too small for squeezing {} at n_tau {}", spec.extent,
                                             s_o, n_tau));
    }
    return WignerGrid::sample(spec, 0.0, n_tau == 0.0,
                              [s_o, n_tau](Complex a) { return teleported_squeezed_value(s_o, n_tau, a); });
}

}  // namespace cvtele
