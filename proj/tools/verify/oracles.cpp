#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <cvtele/numerics.hpp>
#include <cvtele/phase_space.hpp>

namespace cvtele::oracle {

GaussianTwoMode moment_flow(const ChannelParams& p, double step) {
    p.validate();
    if (p.T >= 1.0) throw std::invalid_argument("moment_flow: T must be below 1");
    const double tau = -std::log1p(-p.T);

    const double ch = std::cosh(2.0 * p.s_qc) / 4.0;
    const double sh = std::sinh(2.0 * p.s_qc) / 4.0;
    Eigen::Matrix4d c;
    c << ch, sh, 0, 0,
         sh, ch, 0, 0,
         0, 0, ch, -sh,
         0, 0, -sh, ch;
    const Eigen::Matrix4d diffusion = Eigen::Matrix4d::Identity() * (1.0 + 2.0 * p.n_bar) / 4.0;
    auto rhs = [&](const Eigen::Matrix4d& x) -> Eigen::Matrix4d { return diffusion - x; };

    const auto steps = static_cast<long>(std::ceil(tau / step));
    const double h = steps > 0 ? tau / static_cast<double>(steps) : 0.0;
    for (long k = 0; k < steps; ++k) {
        const Eigen::Matrix4d k1 = rhs(c);
        const Eigen::Matrix4d k2 = rhs(c + 0.5 * h * k1);
        const Eigen::Matrix4d k3 = rhs(c + 0.5 * h * k2);
        const Eigen::Matrix4d k4 = rhs(c + h * k3);
        c += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return {4.0 * c(0, 0), 4.0 * c(0, 1)};
}

double fock_overlap_radial(int m, double n_tau) {
    using std::numbers::pi;
    const QuadratureRule radial = gauss_legendre(160, 0.0, 12.0);
    const QuadratureRule gh = gauss_hermite(20);
    auto w_m = [m](double u) {
        return 2.0 / pi * (m % 2 ? -1.0 : 1.0) * std::exp(-2.0 * u) * laguerre(m, 4.0 * u);
    };
    // W_r(r) = int d^2 delta P_tau(delta) W_m(r + delta). Both Gaussians go
    // into the Hermite weight (precision p about delta_0 = -2r/p), leaving a
    // Laguerre polynomial the rule integrates exactly. Rotational symmetry
    // puts r on the real axis.
    const double p = 2.0 + 1.0 / n_tau;
    const double sign = m % 2 ? -1.0 : 1.0;
    auto w_r = [&](double r) {
        double sum = 0.0;
        for (int i = 0; i < gh.order; ++i) {
            for (int j = 0; j < gh.order; ++j) {
                const double x = r - 2.0 * r / p + gh.nodes[i] / std::sqrt(p);
                const double y = gh.nodes[j] / std::sqrt(p);
                sum += gh.weights[i] * gh.weights[j] * laguerre(m, 4.0 * (x * x + y * y));
            }
        }
        return sum * sign * 2.0 / pi * std::exp(4.0 * r * r / p - 2.0 * r * r) / (pi * n_tau * p);
    };
    // pi int d^2 alpha W_m W_r = pi * 2 pi int r dr W_m(r^2) W_r(r).
    double total = 0.0;
    for (int k = 0; k < radial.order; ++k) {
        const double r = radial.nodes[k];
        total += radial.weights[k] * r * w_m(r * r) * w_r(r);
    }
    return pi * 2.0 * pi * total;
}

Complex fd_moment(const WignerGrid& w, int m, int n, double h) {
    if (m < 0 || n < 0 || m + n > 2) throw std::invalid_argument("fd_moment: m + n <= 2");
    const double sigma = w.sigma();
    auto cp = [&](double x, double y) {
        const Complex xi{x, y};
        return std::exp((1.0 - sigma) * std::norm(xi) / 2.0) * characteristic(w, xi);
    };
    struct Derivs {
        Complex fx, fy, fxx, fyy, fxy;
    };
    auto derivs = [&](double s) {
        const Complex f0 = cp(0, 0);
        const Complex px = cp(s, 0), mx = cp(-s, 0), py = cp(0, s), my = cp(0, -s);
        const Complex pp = cp(s, s), pm = cp(s, -s), mp = cp(-s, s), mm = cp(-s, -s);
        return Derivs{(px - mx) / (2 * s), (py - my) / (2 * s), (px - 2.0 * f0 + mx) / (s * s),
                      (py - 2.0 * f0 + my) / (s * s), (pp - pm - mp + mm) / (4 * s * s)};
    };
    const Derivs a = derivs(h);
    const Derivs b = derivs(h / 2.0);
    auto rich = [](Complex coarse, Complex fine) { return (4.0 * fine - coarse) / 3.0; };
    const Complex fx = rich(a.fx, b.fx), fy = rich(a.fy, b.fy);
    const Complex fxx = rich(a.fxx, b.fxx), fyy = rich(a.fyy, b.fyy), fxy = rich(a.fxy, b.fxy);
    const Complex i{0.0, 1.0};
    // a^dagger <-> d/dxi = (d_x - i d_y)/2, a <-> -d/dxi* = -(d_x + i d_y)/2.
    if (m == 0 && n == 0) return cp(0, 0);
    if (m == 1 && n == 0) return (fx - i * fy) / 2.0;
    if (m == 0 && n == 1) return -(fx + i * fy) / 2.0;
    if (m == 1 && n == 1) return -(fxx + fyy) / 4.0;
    if (m == 2 && n == 0) return (fxx - fyy - 2.0 * i * fxy) / 4.0;
    return (fxx - fyy + 2.0 * i * fxy) / 4.0;
}

}  // namespace cvtele::oracle
