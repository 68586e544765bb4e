#include "cvtele/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cvtele/errors.hpp"
#include "cvtele/states.hpp"

using namespace cvtele;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double laguerre_direct(int m, double x) {
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) sum += binomial(m, k) * std::pow(-x, k) / std::tgamma(k + 1.0);
    return sum;
}

double legendre_direct(int m, double z) {
    switch (m) {
        case 0: return 1.0;
        case 1: return z;
        case 2: return (3 * z * z - 1) / 2;
        case 3: return (5 * z * z * z - 3 * z) / 2;
        case 4: return (35 * std::pow(z, 4) - 30 * z * z + 3) / 8;
        default: return (63 * std::pow(z, 5) - 70 * std::pow(z, 3) + 15 * z) / 8;
    }
}

}  // namespace

TEST(laguerre, examples) {
    EXPECT_EQ(laguerre(0, 3.7), 1.0);
    EXPECT_EQ(laguerre(1, 2.0), -1.0);
    EXPECT_DOUBLE_EQ(laguerre(2, 1.0), -0.5);
}

TEST(legendre, examples) {
    EXPECT_EQ(legendre(0, 5.0), 1.0);
    EXPECT_EQ(legendre(1, -0.3), -0.3);
    EXPECT_DOUBLE_EQ(legendre(2, 0.5), -0.125);
}

TEST(recurrences, match_direct_polynomials) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> x(0.0, 10.0), z(-3.0, 3.0);
    for (int k = 0; k < 20; ++k) {
        const double xv = x(rng), zv = z(rng);
        for (int m = 0; m <= 5; ++m) {
            const double lag = laguerre_direct(m, xv);
            EXPECT_NEAR(laguerre(m, xv), lag, 1e-10 * std::max(1.0, std::abs(lag))) << m << " " << xv;
            EXPECT_NEAR(legendre(m, zv), legendre_direct(m, zv), 1e-10 * std::max(1.0, std::abs(legendre_direct(m, zv))));
        }
    }
}

TEST(gauss_hermite, low_orders) {
    const QuadratureRule one = gauss_hermite(1);
    ASSERT_EQ(one.nodes.size(), 1u);
    EXPECT_EQ(one.nodes[0], 0.0);
    EXPECT_NEAR(one.weights[0], kSqrtPi, 1e-15);

    const QuadratureRule two = gauss_hermite(2);
    EXPECT_NEAR(two.nodes[0], -1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(two.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(two.weights[0], kSqrtPi / 2, 1e-15);
    EXPECT_NEAR(two.weights[1], kSqrtPi / 2, 1e-15);
}

TEST(gauss_hermite, fourth_moment_order_40) {
    const QuadratureRule r = gauss_hermite(40);
    double sum = 0.0;
    for (int i = 0; i < r.order; ++i) sum += r.weights[i] * std::pow(r.nodes[i], 4);
    EXPECT_NEAR(sum, 0.75 * kSqrtPi, 1e-12);
}

TEST(gauss_hermite, rule_invariants_all_orders) {
    for (int k = 1; k <= 200; ++k) {
        const QuadratureRule r = gauss_hermite(k);
        ASSERT_EQ(r.order, k);
        ASSERT_EQ(static_cast<int>(r.nodes.size()), k);
        double sum = 0.0;
        for (int i = 0; i < k; ++i) {
            ASSERT_GT(r.weights[i], 0.0) << "order " << k;
            if (i > 0) ASSERT_LT(r.nodes[i - 1], r.nodes[i]) << "order " << k;
            sum += r.weights[i];
        }
        EXPECT_NEAR(sum, kSqrtPi, 1e-12) << "order " << k;
    }
}

TEST(gauss_hermite, exact_for_monomials) {
    // int x^j e^{-x^2} = Gamma((j+1)/2) for even j, 0 for odd j.
    for (int k : {1, 3, 8, 20, 40, 60}) {
        const QuadratureRule r = gauss_hermite(k);
        for (int j = 0; j <= 2 * k - 1 && j <= 80; ++j) {
            double sum = 0.0, scale = 0.0;
            for (int i = 0; i < k; ++i) {
                const double term = r.weights[i] * std::pow(r.nodes[i], j);
                sum += term;
                scale += std::abs(term);
            }
            const double exact = j % 2 ? 0.0 : std::tgamma((j + 1) / 2.0);
            EXPECT_NEAR(sum, exact, 1e-12 * std::max(1.0, scale)) << "order " << k << " degree " << j;
        }
    }
}

TEST(gauss_hermite, order_out_of_range) {
    EXPECT_THROW(gauss_hermite(0), ConfigurationError);
    EXPECT_THROW(gauss_hermite(201), ConfigurationError);
}

TEST(gauss_legendre, integrates_polynomials_on_interval) {
    const QuadratureRule r = gauss_legendre(10, 1.0, 3.0);
    double sum = 0.0;
    for (int i = 0; i < r.order; ++i) sum += r.weights[i] * std::pow(r.nodes[i], 7);
    EXPECT_NEAR(sum, (std::pow(3.0, 8) - 1.0) / 8.0, 1e-10);
}

TEST(grid_integrate, examples) {
    const GridSpec spec;
    EXPECT_NEAR(grid_integrate(fock_wigner(0, spec)), 1.0, 1e-6);
    EXPECT_NEAR(grid_integrate(fock_wigner(2, spec)), 1.0, 1e-6);
    EXPECT_EQ(grid_integrate(WignerGrid(spec, 0.0)), 0.0);
}

TEST(grid_integrate, constant_uses_trapezoid_weights) {
    const GridSpec spec{1.0, 11};
    WignerGrid g(spec, 0.0);
    for (auto& v : g.values()) v = 1.0;
    EXPECT_NEAR(grid_integrate(g), 4.0, 1e-13);
}
