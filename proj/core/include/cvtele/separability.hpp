#pragma once

#include <optional>

#include "cvtele/grid.hpp"
#include "cvtele/states.hpp"

namespace cvtele {

// Hermitian exponent matrix of a zero-mean two-mode Gaussian P function
//   P(b, c) = det(N)/pi^2 exp(-sum_ij alpha_i N_ij alpha_j*).
struct PExponentMatrix {
    double n_bb = 0.0;
    double n_cc = 0.0;
    Complex n_bc{0.0, 0.0};

    double det() const { return n_bb * n_cc - std::norm(n_bc); }
    PExponentMatrix swapped() const { return {n_cc, n_bb, std::conj(n_bc)}; }

    // Direct evaluation of the Gaussian P function.
    double value(Complex a_b, Complex a_c) const;
};

// Parameters of the mixture P(b, c) = int d^2 beta Pm(beta) P_b(b; beta) P_c(c; beta):
// m_b = n_bb + |n_bc|^2, m_c = n_cc + 1, m_s = det N / (m_b m_c).
struct SeparableDecomposition {
    double m_b = 0.0;
    double m_c = 0.0;
    double m_s = 0.0;
};

// Removes one vacuum unit of noise per mode from the channel Wigner function.
// Mode c is labelled by its conjugate amplitude so the b-c correlation takes
// the Hermitian form b c'* (a relabelling of phase-space coordinates, which
// leaves positivity and normalizability untouched). Returns nullopt when the
// result is not a normalizable Gaussian, which happens exactly when
// gamma - lambda <= 1.
std::optional<PExponentMatrix> p_exponent_from_channel(const GaussianTwoMode& g);

// n_bb > 0, n_cc > 0 and det N > 0 (all strict).
bool check_criterion(const PExponentMatrix& n);

// Throws NotSeparableError when check_criterion fails.
SeparableDecomposition decompose(const PExponentMatrix& n);

// The three explicit factors of the mixture.
double mixture_weight(const SeparableDecomposition& d, Complex beta);
double mode_b_factor(const SeparableDecomposition& d, const PExponentMatrix& n, Complex a_b, Complex beta);
double mode_c_factor(const SeparableDecomposition& d, Complex a_c, Complex beta);

// Numerical beta integral of the mixture, Gauss-Hermite nodes placed on the
// completed square. Throws AccuracyError if the nodes cannot be placed.
double reconstruct_p(const SeparableDecomposition& d, const PExponentMatrix& n, Complex a_b, Complex a_c,
                     int order = 30);

struct ChannelSeparability {
    bool appendix = false;    // positive, normalizable P function exists
    bool noise_rule = false;  // n_tau >= 1
    bool boundary = false;    // |n_tau - 1| below 1e-9: the two verdicts may disagree
};

ChannelSeparability classify_channel(const GaussianTwoMode& g);

bool channel_is_separable_via_appendix(const GaussianTwoMode& g);

}  // namespace cvtele
