#pragma once

#include <vector>

#include "cvtele/grid.hpp"

namespace cvtele {

// Laguerre polynomial L_m(x) by the three-term recurrence.
double laguerre(int m, double x);

// Legendre polynomial P_m(z) by Bonnet's recurrence. |z| > 1 is allowed.
double legendre(int m, double z);

double binomial(int n, int k);

struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // all positive
    int order = 0;
};

// Gauss-Hermite rule for the weight exp(-x^2) on the real line, exact for
// polynomials up to degree 2*order-1. Valid for 1 <= order <= 200.
QuadratureRule gauss_hermite(int order);

// Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(int order, double lo = -1.0, double hi = 1.0);

// Trapezoidal integral over the grid with d^2 alpha = d alpha_r d alpha_i.
double grid_integrate(const WignerGrid& g);

}  // namespace cvtele
