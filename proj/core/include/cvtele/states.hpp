#pragma once

#include <array>
#include <string>

#include "cvtele/grid.hpp"

namespace cvtele {

// Symmetric two-mode Gaussian Wigner function
//   W(b, c) = N exp[-2 gamma/(gamma^2 - lam^2) (|b|^2 + |c|^2)
//                    + 2 lam/(gamma^2 - lam^2) (b c + b* c*)]
// with N = 4 / (pi^2 (gamma^2 - lam^2)).
struct GaussianTwoMode {
    double gamma = 1.0;
    double lam = 0.0;

    double det() const { return gamma * gamma - lam * lam; }
    double norm() const;
    // Total mean photon number of both modes.
    double mean_photon_number() const { return gamma - 1.0; }
    double noise_factor() const { return gamma - lam; }

    // Throws ConfigurationError unless gamma >= 1, gamma > |lam| and
    // gamma^2 - lam^2 >= 1.
    void validate() const;

    double wigner(Complex b, Complex c) const;
};

GaussianTwoMode two_mode_squeezed_vacuum(double s_qc);

// An analytically known single-mode input: a displaced Fock state or a
// displaced, axis-aligned squeezed vacuum. Its Wigner function factors into a
// Gaussian envelope exp[-(a - mu)^T P (a - mu)] times a polynomial remainder,
// which is what the brute-force protocol quadrature consumes.
class InputState {
public:
    enum class Kind { Fock, Squeezed };

    static InputState vacuum() { return fock(0); }
    static InputState fock(int m, Complex displacement = {});
    static InputState squeezed(double s_o, Complex displacement = {});
    static InputState coherent(Complex mu) { return fock(0, mu); }

    // "vacuum", "fock:m", "squeezed:s_o", "coherent:re,im".
    // Throws ConfigurationError on anything else.
    static InputState parse(const std::string& text);

    Kind kind() const { return kind_; }
    int fock_number() const { return m_; }
    double squeezing() const { return s_o_; }
    Complex displacement() const { return mu_; }
    std::string label() const;

    double wigner(Complex alpha) const;

    // Diagonal envelope precision {P_rr, P_ii}; the envelope is centred on
    // displacement().
    std::array<double, 2> envelope_precision() const;
    double remainder(Complex alpha) const;
    int remainder_degree() const { return kind_ == Kind::Fock ? 2 * m_ : 0; }

    // Photon statistics of the undisplaced state are exact; these include the
    // displacement.
    double mean_photon_number() const;

    WignerGrid to_grid(const GridSpec& spec) const;

private:
    InputState(Kind kind, int m, double s_o, Complex mu) : kind_(kind), m_(m), s_o_(s_o), mu_(mu) {}

    Kind kind_;
    int m_;
    double s_o_;
    Complex mu_;
};

inline constexpr int kMaxFockNumber = 50;

// (2/pi) (-1)^m exp(-2|alpha|^2) L_m(4|alpha|^2)
WignerGrid fock_wigner(int m, const GridSpec& spec);

// (2/pi) exp[-2 e^{2 s_o} alpha_r^2 - 2 e^{-2 s_o} alpha_i^2]
WignerGrid squeezed_vacuum_wigner(double s_o, const GridSpec& spec);

// Vacuum displaced to mu.
WignerGrid coherent_wigner(Complex mu, const GridSpec& spec);

}  // namespace cvtele
