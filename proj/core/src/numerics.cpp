#include "cvtele/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "cvtele/errors.hpp"

namespace cvtele {

double laguerre(int m, double x) {
    if (m < 0) throw DomainError("laguerre: negative degree");
    if (m == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 - x;
    for (int k = 1; k < m; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double legendre(int m, double z) {
    if (m < 0) throw DomainError("legendre: negative degree");
    if (m == 0) return 1.0;
    double prev = 1.0;
    double cur = z;
    for (int k = 1; k < m; ++k) {
        const double next = ((2.0 * k + 1.0) * z * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
    }
    return std::round(r);
}

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix of
// the Hermite recurrence. Each node is then polished by Newton on the
// orthonormal recurrence, whose derivative also yields the weight without
// the underflow that eigenvector components suffer in the tails.
QuadratureRule hermite_golub_welsch(int n) {
    constexpr double kPiM4 = 0.7511255444649425;  // pi^(-1/4)
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd roots = solver.eigenvalues();  // increasing

    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = roots[i];
        double deriv = 0.0;
        for (int it = 0; it < 8; ++it) {
            double p1 = kPiM4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            deriv = std::sqrt(2.0 * n) * p2;
            const double step = p1 / deriv;
            z -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        rule.nodes[i] = z;
        rule.weights[i] = 2.0 / (deriv * deriv);
    }
    // Symmetrize to remove round-off asymmetry.
    for (int i = 0; i < n / 2; ++i) {
        const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[n - 1 - i] + rule.weights[i]);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
    if (order < 1 || order > 200) {
        throw ConfigurationError("gauss_hermite: order must be in [1, 200], got " + std::to_string(order));
    }
    if (order == 1) {
        return {{0.0}, {std::sqrt(std::numbers::pi)}, 1};
    }
    return hermite_golub_welsch(order);
}

QuadratureRule gauss_legendre(int order, double lo, double hi) {
    if (order < 1) throw ConfigurationError("gauss_legendre: order must be positive");
    std::vector<double> x(order), w(order);
    const int half = (order + 1) / 2;
    const double mid = 0.5 * (hi + lo);
    const double halfwidth = 0.5 * (hi - lo);
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double deriv = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            deriv = order * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / deriv;
            z -= step;
            if (std::abs(step) <= 1e-16) break;
        }
        x[i] = mid - halfwidth * z;
        x[order - 1 - i] = mid + halfwidth * z;
        w[i] = 2.0 * halfwidth / ((1.0 - z * z) * deriv * deriv);
        w[order - 1 - i] = w[i];
    }
    return {std::move(x), std::move(w), order};
}

double grid_integrate(const WignerGrid& g) {
    const std::size_t n = g.resolution();
    auto edge = [n](std::size_t i) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; };
    double total = 0.0;
    for (std::size_t ir = 0; ir < n; ++ir) {
        double row = 0.0;
        for (std::size_t ii = 0; ii < n; ++ii) {
            row += edge(ii) * g.at(ir, ii);
        }
        total += edge(ir) * row;
    }
    return total * g.spec().cell_area();
}

}  // namespace cvtele
