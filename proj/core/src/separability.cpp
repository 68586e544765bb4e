#include "cvtele/separability.hpp"

#include <cmath>
#include <numbers>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"

namespace cvtele {

namespace {
constexpr double kPi = std::numbers::pi;
}

double PExponentMatrix::value(Complex a_b, Complex a_c) const {
    const double quad = n_bb * std::norm(a_b) + n_cc * std::norm(a_c) + 2.0 * (n_bc * a_b * std::conj(a_c)).real();
    return det() / (kPi * kPi) * std::exp(-quad);
}

std::optional<PExponentMatrix> p_exponent_from_channel(const GaussianTwoMode& g) {
    g.validate();
    // P-ordered covariance of (b, c*): <|b|^2> = <|c|^2> = (gamma - 1)/2 and
    // <b c> = lambda/2.
    const double diag = (g.gamma - 1.0) / 2.0;
    const double off = g.lam / 2.0;
    const double det = ((g.gamma - g.lam) - 1.0) * ((g.gamma + g.lam) - 1.0) / 4.0;
    if (!(diag > 0.0) || !(det > 0.0)) return std::nullopt;
    return PExponentMatrix{diag / det, diag / det, Complex{-off / det, 0.0}};
}

bool check_criterion(const PExponentMatrix& n) { return n.n_bb > 0.0 && n.n_cc > 0.0 && n.det() > 0.0; }

SeparableDecomposition decompose(const PExponentMatrix& n) {
    if (!check_criterion(n)) throw NotSeparableError("P exponent matrix fails the positivity criterion");
    SeparableDecomposition d;
    d.m_b = n.n_bb + std::norm(n.n_bc);
    d.m_c = n.n_cc + 1.0;
    d.m_s = n.det() / (d.m_b * d.m_c);
    return d;
}

double mixture_weight(const SeparableDecomposition& d, Complex beta) {
    return d.m_s / kPi * std::exp(-d.m_s * std::norm(beta));
}

double mode_b_factor(const SeparableDecomposition& d, const PExponentMatrix& n, Complex a_b, Complex beta) {
    const double cross = 2.0 * (a_b * n.n_bc * std::conj(beta)).real();
    return d.m_b / kPi * std::exp(-d.m_b * std::norm(a_b) + cross - std::norm(n.n_bc) / d.m_b * std::norm(beta));
}

double mode_c_factor(const SeparableDecomposition& d, Complex a_c, Complex beta) {
    const double cross = 2.0 * (a_c * std::conj(beta)).real();
    return d.m_c / kPi * std::exp(-d.m_c * std::norm(a_c) - cross - std::norm(beta) / d.m_c);
}

double reconstruct_p(const SeparableDecomposition& d, const PExponentMatrix& n, Complex a_b, Complex a_c, int order) {
    // beta-dependence of the product: exp(-K |beta|^2 + 2 Re(beta* u)).
    const double k = d.m_s + std::norm(n.n_bc) / d.m_b + 1.0 / d.m_c;
    if (!(k > 0.0)) throw AccuracyError("beta integrand is not a decaying Gaussian");
    const Complex u = a_b * n.n_bc - a_c;
    const Complex centre = u / k;
    const double scale = 1.0 / std::sqrt(k);
    const QuadratureRule rule = gauss_hermite(order);
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        for (int j = 0; j < rule.order; ++j) {
            const Complex y{rule.nodes[i], rule.nodes[j]};
            const Complex beta = centre + scale * y;
            const double integrand =
                mixture_weight(d, beta) * mode_b_factor(d, n, a_b, beta) * mode_c_factor(d, a_c, beta);
            // Divide out the weight exp(-|y|^2) the rule already carries.
            sum += rule.weights[i] * rule.weights[j] * integrand * std::exp(std::norm(y));
        }
    }
    return sum * scale * scale;
}

ChannelSeparability classify_channel(const GaussianTwoMode& g) {
    ChannelSeparability out;
    const auto n = p_exponent_from_channel(g);
    out.appendix = n.has_value() && check_criterion(*n);
    out.noise_rule = g.noise_factor() >= 1.0;
    out.boundary = std::abs(g.noise_factor() - 1.0) < 1e-9;
    return out;
}

bool channel_is_separable_via_appendix(const GaussianTwoMode& g) { return classify_channel(g).appendix; }

}  // namespace cvtele
