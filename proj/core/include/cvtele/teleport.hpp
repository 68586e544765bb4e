#pragma once

#include "cvtele/channel.hpp"
#include "cvtele/grid.hpp"

namespace cvtele {

// P_tau(delta) = exp(-|delta|^2 / n_tau) / (pi n_tau): the Gaussian that the
// teleportation map convolves the input Wigner function with.
struct TeleportKernel {
    double n_tau = 0.0;

    explicit TeleportKernel(double n) : n_tau(n) {}
    explicit TeleportKernel(NoiseFactor n) : n_tau(n.value) {}
};

// Throws DomainError for n_tau <= 0.
double kernel_value(const TeleportKernel& k, Complex delta);

// W_r = P_tau * W_o on the input grid. n_tau = 0 returns the input unchanged.
// Throws AccuracyError when the kernel is too wide for the grid window.
WignerGrid teleport_state(const WignerGrid& w_o, double n_tau);
WignerGrid teleport_state(const WignerGrid& w_o, NoiseFactor n_tau);

// R_sigma of the teleported state, obtained from the input Wigner function by
// a single forward convolution with variance (n_tau - sigma/2)/2 per axis.
// For n_tau >= 1/2 this reaches the teleported P function without any
// deconvolution. Throws DomainError when n_tau < sigma/2.
WignerGrid teleported_quasiprobability(const WignerGrid& w_o, double n_tau, double sigma);

// Closed-form teleported Fock state. Near n_tau = 1/2 the Laguerre form is a
// 0 * inf product and the term-wise expansion is used instead.
double teleported_fock_value(int m, double n_tau, Complex alpha);
WignerGrid teleported_fock_wigner(int m, double n_tau, const GridSpec& spec);

// Closed-form teleported squeezed vacuum with A(s) = 2 n_tau + exp(-2 s).
double teleported_squeezed_value(double s_o, double n_tau, Complex alpha);
WignerGrid teleported_squeezed_wigner(double s_o, double n_tau, const GridSpec& spec);

}  // namespace cvtele
