#pragma once

#include <optional>

#include "cvtele/grid.hpp"

namespace cvtele {

struct PhotonStats {
    double mean = 0.0;
    double variance = 0.0;
};

// Statistics of X(phi) = e^{-i phi} a + e^{i phi} a^dagger; vacuum variance is 1.
struct QuadratureStats {
    double phi = 0.0;
    double mean = 0.0;
    double variance = 1.0;
};

// Normal-ordered moment <(a^dagger)^m a^n> for m + n <= 4, taken as the
// derivative of the P characteristic function at xi = 0. The derivatives of
// C_sigma are moments of the grid, and the Gaussian reordering factor
// exp((1 - sigma)|xi|^2 / 2) is differentiated analytically.
Complex moments(const WignerGrid& w, int m, int n);

PhotonStats photon_stats(const WignerGrid& w);
QuadratureStats quadrature_stats(const WignerGrid& w, double phi);
// min over phi of [Delta X(phi)]^2, and the angle where it is reached.
QuadratureStats minimum_quadrature_variance(const WignerGrid& w);

// Exact statistics after teleporting Fock state m: N = m + n_tau and
// Var = (2m + 1) n_tau + n_tau^2.
PhotonStats teleported_photon_stats(int m, double n_tau);

// Closed-form transfer for arbitrary input statistics (teleportation adds
// thermal-like noise of mean n_tau in the P representation).
PhotonStats teleported_photon_stats(const PhotonStats& input, double n_tau);

// Statistics read off the teleported grid.
PhotonStats teleported_photon_stats(const WignerGrid& w_o, double n_tau);

// Largest n_tau for which the teleported state is still sub-Poissonian:
// sqrt(N^2 + N - Var) - N, or nullopt if that is not a positive real number.
std::optional<double> sub_poisson_threshold(const PhotonStats& input);

// Mean unchanged, variance increased by 2 n_tau, for every phi.
QuadratureStats quadrature_transfer(const QuadratureStats& q, double n_tau);

// (1 - var_min)/2 when positive; the teleported state stays squeezed below it.
std::optional<double> squeezing_threshold(double var_min);

// True iff the teleported P function is guaranteed non-negative for every
// input, i.e. n_tau >= 1.
bool p_positive_after_teleport(double n_tau);

struct NegativityProbe {
    double sigma = 0.0;      // ordering at which the teleported state was sampled
    double min_value = 0.0;  // smallest grid value of R_sigma
};

// Samples the teleported R_sigma at the largest reachable sigma (1 when
// n_tau > 1/2, otherwise 2 n_tau) and reports its minimum. A negative
// minimum proves the nonclassicality of this input survived.
NegativityProbe p_negativity_probe(const WignerGrid& w_o, double n_tau);

}  // namespace cvtele
