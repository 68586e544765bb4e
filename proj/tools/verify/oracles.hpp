#pragma once

#include <cvtele/channel.hpp>
#include <cvtele/grid.hpp>
#include <cvtele/states.hpp>

// Independent reference computations. None of these call the closed forms
// they are used to check.
namespace cvtele::oracle {

// Integrates the Gaussian moment flow of the thermal Fokker-Planck equation,
// dC/dt = -gamma C + gamma (1 + 2 n_bar)/4 I, for the 4x4 covariance of
// (Re b, Re c, Im b, Im c) with classical RK4 in gamma t, starting from the
// two-mode squeezed vacuum. Requires T < 1.
GaussianTwoMode moment_flow(const ChannelParams& p, double step = 1e-4);

// pi int d^2 alpha W_m(alpha) W_r(alpha) for Fock m teleported with n_tau,
// as a radial Gauss-Legendre integral of the Laguerre forms.
double fock_overlap_radial(int m, double n_tau);

// Normal-ordered moment <(a^dagger)^m a^n> for m + n <= 2 from central
// differences of the grid characteristic function (step h and h/2,
// Richardson-combined) with the Gaussian reordering applied numerically.
Complex fd_moment(const WignerGrid& w, int m, int n, double h = 1e-3);

}  // namespace cvtele::oracle
