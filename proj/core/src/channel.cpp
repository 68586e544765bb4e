#include "cvtele/channel.hpp"

#include <fmt/format.h>

#include <cmath>

#include "cvtele/errors.hpp"

namespace cvtele {

void ChannelParams::validate() const {
    if (!(s_qc >= 0.0) || !std::isfinite(s_qc)) throw ConfigurationError(fmt::format("s_qc must be >= 0, got {}", s_qc));
    if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) throw ConfigurationError(fmt::format("n_bar must be >= 0, got {}", n_bar));
    if (!(T >= 0.0 && T <= 1.0)) throw ConfigurationError(fmt::format("T must lie in [0, 1], got {}", T));
}

double renormalized_time(double gamma_t) {
    if (!(gamma_t >= 0.0)) throw DomainError("gamma t must be non-negative");
    return -std::expm1(-gamma_t);
}

GaussianTwoMode evolve_channel(const ChannelParams& p) {
    p.validate();
    return {p.T * (1.0 + 2.0 * p.n_bar) + (1.0 - p.T) * std::cosh(2.0 * p.s_qc), (1.0 - p.T) * std::sinh(2.0 * p.s_qc)};
}

NoiseFactor noise_factor(const ChannelParams& p) {
    p.validate();
    return {(2.0 * p.n_bar + 1.0) * p.T + (1.0 - p.T) * std::exp(-2.0 * p.s_qc), NoiseFactor::Kind::Teleport};
}

bool is_separable(const ChannelParams& p) { return noise_factor(p).value >= 1.0; }

NoiseFactor direct_noise(double n_bar, double T) {
    ChannelParams{0.0, n_bar, T}.validate();
    return {n_bar * T, NoiseFactor::Kind::Direct};
}

double teleport_vs_direct_gap(const ChannelParams& p) {
    p.validate();
    const double root = std::sqrt(1.0 - p.T);
    const double aged = 1.0 - root;
    return p.n_bar * aged * aged + 1.0 - root * (1.0 - std::exp(-2.0 * p.s_qc));
}

}  // namespace cvtele
