#include "cvtele/states.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <string>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"

namespace cvtele {

namespace {

constexpr double kPi = std::numbers::pi;

void require_fock_fits(int m, const GridSpec& spec) {
    if (m < 0 || m > kMaxFockNumber) {
        throw ConfigurationError(fmt::format("Fock number must be in [0, {}], got {}", kMaxFockNumber, m));
    }
    // The outermost Wigner ring sits near |alpha| = sqrt(m + 1/2).
    if (std::sqrt(m + 0.5) + 2.0 > spec.extent) {
        throw ConfigurationError(fmt::format("grid extent {} too small for Fock state {}", spec.extent, m));
    }
}

void require_squeezing_fits(double s_o, const GridSpec& spec) {
    if (!std::isfinite(s_o)) throw ConfigurationError("squeezing must be finite");
    // Probability mass of the anti-squeezed axis that falls outside the grid.
    const double outside = std::erfc(std::sqrt(2.0) * spec.extent * std::exp(-std::abs(s_o)));
    if (outside > 1e-2) {
        throw ConfigurationError(
            fmt::format("grid extent {} too small for squeezing {}; grow it as exp(|s_o|)", spec.extent, s_o));
    }
}

void require_displacement_fits(Complex mu, const GridSpec& spec) {
    if (std::abs(mu) + 3.0 > spec.extent) {
        throw ConfigurationError(fmt::format("displacement |mu| = {} leaves the grid", std::abs(mu)));
    }
}

}  // namespace

double GaussianTwoMode::norm() const { return 4.0 / (kPi * kPi * det()); }

void GaussianTwoMode::validate() const {
    if (!std::isfinite(gamma) || !std::isfinite(lam)) throw ConfigurationError("channel parameters must be finite");
    if (gamma < 1.0 - 1e-12 || !(gamma > std::abs(lam)) || det() < 1.0 - 1e-9) {
        throw ConfigurationError(fmt::format("unphysical two-mode Gaussian (gamma={}, lambda={})", gamma, lam));
    }
}

double GaussianTwoMode::wigner(Complex b, Complex c) const {
    const double d = det();
    const double re_bc = b.real() * c.real() - b.imag() * c.imag();
    return norm() * std::exp(-2.0 * gamma / d * (std::norm(b) + std::norm(c)) + 4.0 * lam / d * re_bc);
}

GaussianTwoMode two_mode_squeezed_vacuum(double s_qc) {
    if (!(s_qc >= 0.0) || !std::isfinite(s_qc)) throw ConfigurationError("squeezing must be finite and >= 0");
    return {std::cosh(2.0 * s_qc), std::sinh(2.0 * s_qc)};
}

InputState InputState::fock(int m, Complex displacement) {
    if (m < 0 || m > kMaxFockNumber) {
        throw ConfigurationError(fmt::format("Fock number must be in [0, {}], got {}", kMaxFockNumber, m));
    }
    return {Kind::Fock, m, 0.0, displacement};
}

InputState InputState::squeezed(double s_o, Complex displacement) {
    if (!std::isfinite(s_o)) throw ConfigurationError("squeezing must be finite");
    return {Kind::Squeezed, 0, s_o, displacement};
}

InputState InputState::parse(const std::string& text) {
    auto number = [&text](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw ConfigurationError("bad number in state selector: " + text);
        return v;
    };
    if (text == "vacuum") return vacuum();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigurationError("unknown state selector: " + text);
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    if (kind == "fock") {
        const double m = number(arg);
        if (m != std::floor(m)) throw ConfigurationError("Fock number must be an integer: " + text);
        return fock(static_cast<int>(m));
    }
    if (kind == "squeezed") return squeezed(number(arg));
    if (kind == "coherent") {
        const auto comma = arg.find(',');
        if (comma == std::string::npos) return coherent({number(arg), 0.0});
        return coherent({number(arg.substr(0, comma)), number(arg.substr(comma + 1))});
    }
    throw ConfigurationError("unknown state selector: " + text);
}

std::string InputState::label() const {
    std::string base;
    if (kind_ == Kind::Fock) {
        if (m_ == 0 && mu_ != Complex{}) return fmt::format("coherent:{},{}", mu_.real(), mu_.imag());
        base = m_ == 0 ? "vacuum" : fmt::format("fock:{}", m_);
    } else {
        base = fmt::format("squeezed:{}", s_o_);
    }
    if (mu_ != Complex{}) base += fmt::format("@{},{}", mu_.real(), mu_.imag());
    return base;
}

std::array<double, 2> InputState::envelope_precision() const {
    if (kind_ == Kind::Fock) return {2.0, 2.0};
    return {2.0 * std::exp(2.0 * s_o_), 2.0 * std::exp(-2.0 * s_o_)};
}

double InputState::remainder(Complex alpha) const {
    if (kind_ == Kind::Squeezed) return 2.0 / kPi;
    const double sign = (m_ % 2 == 0) ? 1.0 : -1.0;
    return 2.0 / kPi * sign * laguerre(m_, 4.0 * std::norm(alpha - mu_));
}

double InputState::wigner(Complex alpha) const {
    const auto [pr, pi] = envelope_precision();
    const Complex d = alpha - mu_;
    return std::exp(-pr * d.real() * d.real() - pi * d.imag() * d.imag()) * remainder(alpha);
}

double InputState::mean_photon_number() const {
    const double base = kind_ == Kind::Fock ? m_ : std::sinh(s_o_) * std::sinh(s_o_);
    return base + std::norm(mu_);
}

WignerGrid InputState::to_grid(const GridSpec& spec) const {
    spec.validate();
    if (kind_ == Kind::Fock) {
        require_fock_fits(m_, spec);
    } else {
        require_squeezing_fits(s_o_, spec);
    }
    if (mu_ != Complex{}) require_displacement_fits(mu_, spec);
    return WignerGrid::sample(spec, 0.0, true, [this](Complex a) { return wigner(a); });
}

WignerGrid fock_wigner(int m, const GridSpec& spec) {
    spec.validate();
    require_fock_fits(m, spec);
    return InputState::fock(m).to_grid(spec);
}

WignerGrid squeezed_vacuum_wigner(double s_o, const GridSpec& spec) {
    return InputState::squeezed(s_o).to_grid(spec);
}

WignerGrid coherent_wigner(Complex mu, const GridSpec& spec) {
    spec.validate();
    require_displacement_fits(mu, spec);
    return InputState::coherent(mu).to_grid(spec);
}

}  // namespace cvtele
