#include "cvtele/gaussian_quadrature.hpp"

#include <algorithm>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"

namespace cvtele {

GaussianQuadrature4::GaussianQuadrature4(const Mat& precision, int order, double prune)
    : llt_(precision), order_(order) {
    if (llt_.info() != Eigen::Success || !precision.isApprox(precision.transpose(), 1e-12)) {
        throw DomainError("Gaussian weight is not positive definite");
    }
    const Mat lower = llt_.matrixL();
    const double det_l = lower.diagonal().prod();
    if (!(det_l > 0.0)) {
        throw DomainError("Gaussian weight is not positive definite");
    }
    inv_det_factor_ = 1.0 / det_l;

    // x = center + L^{-T} y turns the exponent into -|y|^2.
    const Mat whiten = lower.transpose().inverse();
    const QuadratureRule rule = gauss_hermite(order);
    const int n = rule.order;
    const double wmax = *std::max_element(rule.weights.begin(), rule.weights.end());
    const double cutoff = prune * wmax * wmax * wmax * wmax;

    for (int i0 = 0; i0 < n; ++i0) {
        const double w0 = rule.weights[i0];
        if (w0 * wmax * wmax * wmax < cutoff) continue;
        for (int i1 = 0; i1 < n; ++i1) {
            const double w01 = w0 * rule.weights[i1];
            if (w01 * wmax * wmax < cutoff) continue;
            for (int i2 = 0; i2 < n; ++i2) {
                const double w012 = w01 * rule.weights[i2];
                if (w012 * wmax < cutoff) continue;
                for (int i3 = 0; i3 < n; ++i3) {
                    const double w = w012 * rule.weights[i3];
                    if (w < cutoff) continue;
                    const Vec y(rule.nodes[i0], rule.nodes[i1], rule.nodes[i2], rule.nodes[i3]);
                    offsets_.push_back(whiten * y);
                    weights_.push_back(w);
                }
            }
        }
    }
}

}  // namespace cvtele
