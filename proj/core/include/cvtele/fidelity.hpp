#pragma once

#include <string_view>

#include "cvtele/grid.hpp"

namespace cvtele {

struct FidelityReport {
    enum class Method { OverlapGrid, FockClosedForm, SqueezedClosedForm };
    double value = 0.0;
    Method method = Method::OverlapGrid;
};

std::string_view method_name(FidelityReport::Method m);

// pi * int d^2 alpha W_o W_r. The original must be a pure state; throws
// ConfigurationError for mismatched geometry or a mixed original.
FidelityReport overlap_fidelity(const WignerGrid& w_o, const WignerGrid& w_r);

// Fidelity written as the double integral of W_o against the teleportation
// kernel and W_o again, on the grid.
FidelityReport double_convolution_fidelity(const WignerGrid& w_o, double n_tau);

// (1 - n)^m / (1 + n)^(m+1) P_m((1 + n^2)/(1 - n^2)); near n = 1 the
// cancelled form sum_k C(m,k)^2 n^(2(m-k)) / (1 + n)^(2m+1) is used.
FidelityReport fock_fidelity(int m, double n_tau);

// The cancelled form on its own, valid for every n_tau >= 0.
double fock_fidelity_regularized(int m, double n_tau);

// (n^2 + 2 n cosh 2s + 1)^(-1/2)
FidelityReport squeezed_fidelity(double s_o, double n_tau);

}  // namespace cvtele
