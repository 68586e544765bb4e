#pragma once

#include "cvtele/states.hpp"

namespace cvtele {

// Environment and channel knobs. T is the renormalized time 1 - exp(-gamma t);
// both modes see the same bath.
struct ChannelParams {
    double s_qc = 0.0;
    double n_bar = 0.0;
    double T = 0.0;

    void validate() const;
};

// Renormalized time for a coupling gamma and elapsed time t.
double renormalized_time(double gamma_t);

struct NoiseFactor {
    enum class Kind { Teleport, Direct };
    double value = 0.0;
    Kind kind = Kind::Teleport;
};

// Gamma = T(1 + 2 n_bar) + (1 - T) cosh 2s, Lambda = (1 - T) sinh 2s.
GaussianTwoMode evolve_channel(const ChannelParams& p);

// n_tau = Gamma - Lambda = (2 n_bar + 1) T + (1 - T) exp(-2 s).
NoiseFactor noise_factor(const ChannelParams& p);

// The channel stops being entangled once n_tau >= 1.
bool is_separable(const ChannelParams& p);

// n_d = n_bar T for a field sent straight through the same bath.
NoiseFactor direct_noise(double n_bar, double T);

// Excess noise of teleportation over direct transmission for a link whose
// full-length renormalized time is p.T. The channel source sits halfway, so
// each channel mode only ages to T' = 1 - sqrt(1 - T).
double teleport_vs_direct_gap(const ChannelParams& p);

}  // namespace cvtele
