#include "cvtele/nonclassicality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"
#include "cvtele/teleport.hpp"

namespace cvtele {

namespace {

// int d^2 alpha (alpha*)^j alpha^k R(alpha) for all j + k <= 4.
struct RawMoments {
    Complex m[5][5] = {};
};

RawMoments raw_moments(const WignerGrid& w) {
    RawMoments out;
    const std::size_t n = w.resolution();
    for (std::size_t ir = 0; ir < n; ++ir) {
        const double er = (ir == 0 || ir + 1 == n) ? 0.5 : 1.0;
        for (std::size_t ii = 0; ii < n; ++ii) {
            const double ei = (ii == 0 || ii + 1 == n) ? 0.5 : 1.0;
            const double v = er * ei * w.at(ir, ii);
            if (v == 0.0) continue;
            const Complex a = w.alpha(ir, ii);
            const Complex ac = std::conj(a);
            Complex pj = v;
            for (int j = 0; j <= 4; ++j) {
                Complex pjk = pj;
                for (int k = 0; j + k <= 4; ++k) {
                    out.m[j][k] += pjk;
                    pjk *= a;
                }
                pj *= ac;
            }
        }
    }
    const double area = w.spec().cell_area();
    for (auto& row : out.m)
        for (auto& x : row) x *= area;
    return out;
}

Complex normal_ordered(const RawMoments& raw, double sigma, int m, int n) {
    // C^P = exp(kappa xi eta) C_sigma with eta = -xi*, kappa = -(1 - sigma)/2.
    const double kappa = -(1.0 - sigma) / 2.0;
    Complex total = 0.0;
    double kappa_pow = 1.0;
    double factorial = 1.0;
    for (int p = 0; p <= std::min(m, n); ++p) {
        if (p > 0) {
            kappa_pow *= kappa;
            factorial *= p;
        }
        total += binomial(m, p) * binomial(n, p) * factorial * kappa_pow * raw.m[m - p][n - p];
    }
    return total;
}

}  // namespace

Complex moments(const WignerGrid& w, int m, int n) {
    if (m < 0 || n < 0 || m + n > 4) throw ConfigurationError("moments: need m, n >= 0 and m + n <= 4");
    return normal_ordered(raw_moments(w), w.sigma(), m, n);
}

PhotonStats photon_stats(const WignerGrid& w) {
    const RawMoments raw = raw_moments(w);
    const double mean = normal_ordered(raw, w.sigma(), 1, 1).real();
    const double second = normal_ordered(raw, w.sigma(), 2, 2).real();
    // <N^2> = <a+^2 a^2> + <a+ a>
    return {mean, second + mean - mean * mean};
}

QuadratureStats quadrature_stats(const WignerGrid& w, double phi) {
    const RawMoments raw = raw_moments(w);
    const Complex a1 = normal_ordered(raw, w.sigma(), 0, 1);
    const Complex a2 = normal_ordered(raw, w.sigma(), 0, 2);
    const double n1 = normal_ordered(raw, w.sigma(), 1, 1).real();
    const Complex rot = std::polar(1.0, -phi);
    const double mean = 2.0 * (rot * a1).real();
    const double second = 2.0 * (rot * rot * a2).real() + 2.0 * n1 + 1.0;
    return {phi, mean, second - mean * mean};
}

QuadratureStats minimum_quadrature_variance(const WignerGrid& w) {
    const RawMoments raw = raw_moments(w);
    const Complex a1 = normal_ordered(raw, w.sigma(), 0, 1);
    const Complex a2 = normal_ordered(raw, w.sigma(), 0, 2);
    const double n1 = normal_ordered(raw, w.sigma(), 1, 1).real();
    // [Delta X(phi)]^2 = A + Re(B e^{-2 i phi})
    const double a = 2.0 * n1 + 1.0 - 2.0 * std::norm(a1);
    const Complex b = 2.0 * (a2 - a1 * a1);
    const double phi = 0.5 * std::arg(b) + std::numbers::pi / 2.0;
    const double mean = 2.0 * (std::polar(1.0, -phi) * a1).real();
    return {phi, mean, a - std::abs(b)};
}

PhotonStats teleported_photon_stats(int m, double n_tau) {
    if (m < 0) throw DomainError("Fock number must be non-negative");
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    return {m + n_tau, (2.0 * m + 1.0) * n_tau + n_tau * n_tau};
}

PhotonStats teleported_photon_stats(const PhotonStats& input, double n_tau) {
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    return {input.mean + n_tau, input.variance + n_tau * n_tau + n_tau + 2.0 * n_tau * input.mean};
}

PhotonStats teleported_photon_stats(const WignerGrid& w_o, double n_tau) {
    return photon_stats(teleport_state(w_o, n_tau));
}

std::optional<double> sub_poisson_threshold(const PhotonStats& input) {
    const double radicand = input.mean * input.mean + input.mean - input.variance;
    if (radicand < 0.0) return std::nullopt;
    const double threshold = std::sqrt(radicand) - input.mean;
    if (!(threshold > 0.0)) return std::nullopt;
    return threshold;
}

QuadratureStats quadrature_transfer(const QuadratureStats& q, double n_tau) {
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    return {q.phi, q.mean, q.variance + 2.0 * n_tau};
}

std::optional<double> squeezing_threshold(double var_min) {
    if (!(var_min >= 0.0)) throw DomainError("variance must be non-negative");
    const double threshold = (1.0 - var_min) / 2.0;
    if (!(threshold > 0.0)) return std::nullopt;
    return threshold;
}

bool p_positive_after_teleport(double n_tau) {
    if (!(n_tau > 0.0)) throw DomainError("noise factor must be positive");
    return n_tau >= 1.0;
}

NegativityProbe p_negativity_probe(const WignerGrid& w_o, double n_tau) {
    const double sigma = std::min(1.0, 2.0 * n_tau);
    const WignerGrid r = teleported_quasiprobability(w_o, n_tau, sigma);
    return {sigma, r.min_value()};
}

}  // namespace cvtele
