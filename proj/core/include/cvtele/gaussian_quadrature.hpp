#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cvtele {

// Integrates exp(-x^T A x + 2 b^T x + c) * f(x) over R^4 with a tensor-product
// Gauss-Hermite rule after completing the square and whitening by the Cholesky
// factor of A. Exact whenever f is a polynomial of degree < 2 * order.
//
// A is fixed at construction so the whitened node set is reused across many
// (b, c) pairs; only the centre of the Gaussian moves between calls.
class GaussianQuadrature4 {
public:
    using Vec = Eigen::Vector4d;
    using Mat = Eigen::Matrix4d;

    // Tensor nodes whose weight falls below `prune` times the largest weight
    // are dropped. Throws DomainError if A is not positive definite.
    GaussianQuadrature4(const Mat& precision, int order, double prune = 1e-22);

    template <class F>
    double integrate(const Vec& linear, double constant, F&& f) const {
        const Vec center = llt_.solve(linear);
        const double scale = std::exp(linear.dot(center) + constant) * inv_det_factor_;
        double sum = 0.0;
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            sum += weights_[k] * f(Vec(center + offsets_[k]));
        }
        return scale * sum;
    }

    // Minimiser of the quadratic exponent for the given linear term.
    Vec center(const Vec& linear) const { return llt_.solve(linear); }

    std::size_t node_count() const { return weights_.size(); }
    int order() const { return order_; }

private:
    Eigen::LLT<Mat> llt_;
    std::vector<Vec, Eigen::aligned_allocator<Vec>> offsets_;
    std::vector<double> weights_;
    double inv_det_factor_ = 0.0;
    int order_ = 0;
};

}  // namespace cvtele
