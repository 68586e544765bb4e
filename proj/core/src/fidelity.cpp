#include "cvtele/fidelity.hpp"

#include <cmath>
#include <numbers>

#include "cvtele/errors.hpp"
#include "cvtele/numerics.hpp"
#include "cvtele/teleport.hpp"

namespace cvtele {

std::string_view method_name(FidelityReport::Method m) {
    switch (m) {
        case FidelityReport::Method::OverlapGrid: return "overlap-grid";
        case FidelityReport::Method::FockClosedForm: return "fock-closed-form";
        case FidelityReport::Method::SqueezedClosedForm: return "squeezed-closed-form";
    }
    return "unknown";
}

FidelityReport overlap_fidelity(const WignerGrid& w_o, const WignerGrid& w_r) {
    if (!(w_o.spec() == w_r.spec())) throw ConfigurationError("overlap_fidelity: grid geometry mismatch");
    if (w_o.sigma() != 0.0 || w_r.sigma() != 0.0) throw ConfigurationError("overlap_fidelity: expected Wigner grids");
    if (!w_o.pure_origin()) throw ConfigurationError("overlap_fidelity: the original state must be pure");
    WignerGrid product(w_o.spec(), 0.0);
    for (std::size_t k = 0; k < product.values().size(); ++k) {
        product.values()[k] = w_o.values()[k] * w_r.values()[k];
    }
    return {std::numbers::pi * grid_integrate(product), FidelityReport::Method::OverlapGrid};
}

FidelityReport double_convolution_fidelity(const WignerGrid& w_o, double n_tau) {
    return overlap_fidelity(w_o, teleport_state(w_o, n_tau));
}

double fock_fidelity_regularized(int m, double n_tau) {
    if (m < 0) throw DomainError("Fock number must be non-negative");
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double c = binomial(m, k);
        sum += c * c * std::pow(n_tau, 2.0 * (m - k));
    }
    return sum / std::pow(1.0 + n_tau, 2 * m + 1);
}

FidelityReport fock_fidelity(int m, double n_tau) {
    if (m < 0) throw DomainError("Fock number must be non-negative");
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    if (std::abs(n_tau - 1.0) < 1e-6) {
        return {fock_fidelity_regularized(m, n_tau), FidelityReport::Method::FockClosedForm};
    }
    const double z = (1.0 + n_tau * n_tau) / (1.0 - n_tau * n_tau);
    const double value = std::pow(1.0 - n_tau, m) / std::pow(1.0 + n_tau, m + 1) * legendre(m, z);
    return {value, FidelityReport::Method::FockClosedForm};
}

FidelityReport squeezed_fidelity(double s_o, double n_tau) {
    if (!(n_tau >= 0.0)) throw DomainError("noise factor must be non-negative");
    const double value = 1.0 / std::sqrt(n_tau * n_tau + 2.0 * n_tau * std::cosh(2.0 * s_o) + 1.0);
    return {value, FidelityReport::Method::SqueezedClosedForm};
}

}  // namespace cvtele
