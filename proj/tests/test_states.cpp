#include "cvtele/states.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cvtele/errors.hpp"
#include "cvtele/nonclassicality.hpp"
#include "cvtele/numerics.hpp"

using namespace cvtele;
using std::numbers::pi;

namespace {

const GridSpec kOdd{6.0, 257};

double origin(const WignerGrid& g) { return g.at(g.resolution() / 2, g.resolution() / 2); }

}  // namespace

TEST(two_mode_squeezed_vacuum, examples) {
    const GaussianTwoMode zero = two_mode_squeezed_vacuum(0.0);
    EXPECT_EQ(zero.gamma, 1.0);
    EXPECT_EQ(zero.lam, 0.0);
    const GaussianTwoMode one = two_mode_squeezed_vacuum(1.0);
    EXPECT_NEAR(one.mean_photon_number(), 2.0 * std::sinh(1.0) * std::sinh(1.0), 1e-12);
    EXPECT_NEAR(one.mean_photon_number(), 2.76220, 5e-6);
    EXPECT_NEAR(one.det(), 1.0, 1e-12);
}

TEST(two_mode_squeezed_vacuum, noise_is_exp_minus_two_s) {
    for (double s = 0.0; s <= 3.0; s += 0.25) {
        const GaussianTwoMode g = two_mode_squeezed_vacuum(s);
        EXPECT_NEAR(g.gamma - g.lam, std::exp(-2.0 * s), 1e-12) << s;
        EXPECT_NO_THROW(g.validate());
    }
}

TEST(gaussian_two_mode, invariants_enforced) {
    EXPECT_THROW((GaussianTwoMode{0.9, 0.0}.validate()), ConfigurationError);
    EXPECT_THROW((GaussianTwoMode{2.0, 2.0}.validate()), ConfigurationError);
    EXPECT_THROW((GaussianTwoMode{1.2, 0.8}.validate()), ConfigurationError);  // det < 1
    EXPECT_NO_THROW((GaussianTwoMode{3.0, 1.0}.validate()));
}

TEST(gaussian_two_mode, wigner_is_normalized) {
    // 4D trapezoid over (Re b, Im b, Re c, Im c).
    for (const GaussianTwoMode g : {two_mode_squeezed_vacuum(0.5), GaussianTwoMode{2.0, 0.8}}) {
        EXPECT_NEAR(g.norm(), 4.0 / (pi * pi * g.det()), 1e-15);
        const int n = 49;
        const double half = 5.0, h = 2.0 * half / (n - 1);
        double total = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        total += g.wigner({-half + a * h, -half + b * h}, {-half + c * h, -half + d * h});
        EXPECT_NEAR(total * std::pow(h, 4), 1.0, 1e-8);
    }
}

TEST(fock_wigner, examples) {
    EXPECT_NEAR(origin(fock_wigner(0, kOdd)), 2.0 / pi, 1e-15);
    EXPECT_NEAR(origin(fock_wigner(1, kOdd)), -2.0 / pi, 1e-15);
    EXPECT_NEAR(grid_integrate(fock_wigner(2, GridSpec{})), 1.0, 1e-6);
    EXPECT_EQ(fock_wigner(2, GridSpec{}).sigma(), 0.0);
}

TEST(fock_wigner, origin_value_is_exact) {
    const GridSpec wide{10.0, 401};
    for (int m = 0; m <= kMaxFockNumber; ++m) {
        EXPECT_EQ(origin(fock_wigner(m, wide)), (m % 2 ? -2.0 : 2.0) / pi) << m;
    }
}

TEST(fock_wigner, rejects_large_m) {
    EXPECT_THROW(fock_wigner(kMaxFockNumber + 1, GridSpec{9.0, 385}), ConfigurationError);
    EXPECT_THROW(fock_wigner(-1, GridSpec{}), ConfigurationError);
    // Ring of m = 40 reaches |alpha| ~ 6.4; does not fit L = 6.
    EXPECT_THROW(fock_wigner(40, GridSpec{}), ConfigurationError);
}

TEST(squeezed_vacuum_wigner, examples) {
    EXPECT_LT(sup_norm_difference(squeezed_vacuum_wigner(0.0, GridSpec{}), fock_wigner(0, GridSpec{})), 1e-15);
    EXPECT_NEAR(origin(squeezed_vacuum_wigner(1.0, kOdd)), 2.0 / pi, 1e-15);

    const WignerGrid g = squeezed_vacuum_wigner(0.5, GridSpec{});
    double second = 0.0;
    for (std::size_t ir = 0; ir < g.resolution(); ++ir)
        for (std::size_t ii = 0; ii < g.resolution(); ++ii) second += g.at(ir, ii) * std::pow(g.alpha(ir, ii).real(), 2);
    second *= g.spec().cell_area();
    EXPECT_NEAR(second, std::exp(-1.0) / 4.0, 1e-6);
    EXPECT_NEAR(quadrature_stats(g, 0.0).variance, std::exp(-1.0), 1e-6);
}

TEST(squeezed_vacuum_wigner, extent_check) {
    EXPECT_NO_THROW(squeezed_vacuum_wigner(1.5, GridSpec{}));
    EXPECT_THROW(squeezed_vacuum_wigner(3.0, GridSpec{}), ConfigurationError);
    EXPECT_THROW(squeezed_vacuum_wigner(-3.0, GridSpec{}), ConfigurationError);
    EXPECT_NO_THROW(squeezed_vacuum_wigner(3.0, GridSpec{40.0, 1701}));
}

TEST(coherent_wigner, examples) {
    EXPECT_LT(sup_norm_difference(coherent_wigner({0.0, 0.0}, GridSpec{}), fock_wigner(0, GridSpec{})), 1e-15);

    const WignerGrid g = coherent_wigner({1.0, 0.0}, GridSpec{6.0, 241});  // spacing 0.05 hits alpha = 1
    std::size_t best = 0;
    for (std::size_t k = 1; k < g.values().size(); ++k)
        if (g.values()[k] > g.values()[best]) best = k;
    const Complex peak = g.alpha(best / g.resolution(), best % g.resolution());
    EXPECT_NEAR(peak.real(), 1.0, 1e-12);
    EXPECT_NEAR(peak.imag(), 0.0, 1e-12);

    EXPECT_NEAR(moments(coherent_wigner({1.0, 0.0}, GridSpec{}), 1, 1).real(), 1.0, 1e-6);
}

TEST(coherent_wigner, displacement_must_fit) {
    EXPECT_NO_THROW(coherent_wigner({3.0, 0.0}, GridSpec{}));
    EXPECT_THROW(coherent_wigner({3.0, 0.5}, GridSpec{}), ConfigurationError);
}

TEST(constructors, integrate_to_one) {
    const GridSpec spec;
    for (int m = 0; m <= 8; ++m) EXPECT_NEAR(grid_integrate(fock_wigner(m, spec)), 1.0, 1e-5) << m;
    for (double s : {-0.7, -0.3, 0.0, 0.4, 0.7}) EXPECT_NEAR(grid_integrate(squeezed_vacuum_wigner(s, spec)), 1.0, 1e-5) << s;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int k = 0; k < 10; ++k) {
        const Complex mu{coord(rng), coord(rng)};
        EXPECT_NEAR(grid_integrate(coherent_wigner(mu, spec)), 1.0, 1e-5) << mu;
    }
}

TEST(input_state, parse_selectors) {
    EXPECT_EQ(InputState::parse("vacuum").label(), "vacuum");
    EXPECT_EQ(InputState::parse("fock:3").fock_number(), 3);
    EXPECT_EQ(InputState::parse("squeezed:-0.5").kind(), InputState::Kind::Squeezed);
    EXPECT_EQ(InputState::parse("squeezed:-0.5").squeezing(), -0.5);
    EXPECT_EQ(InputState::parse("coherent:1,-2").displacement(), Complex(1.0, -2.0));
    EXPECT_EQ(InputState::parse("coherent:1,-2").label(), "coherent:1,-2");
    for (const char* bad : {"", "banana", "fock:", "fock:1.5", "fock:x", "squeezed:1e", "coherent:1,", "fock:-1"}) {
        EXPECT_THROW(InputState::parse(bad), ConfigurationError) << bad;
    }
}

TEST(input_state, envelope_times_remainder) {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (const InputState in : {InputState::fock(3, {0.3, 0.1}), InputState::squeezed(0.6, {-0.5, 0.2})}) {
        const auto [pr, pi_] = in.envelope_precision();
        for (int k = 0; k < 10; ++k) {
            const Complex a{coord(rng), coord(rng)};
            const Complex d = a - in.displacement();
            const double expected = std::exp(-pr * d.real() * d.real() - pi_ * d.imag() * d.imag()) * in.remainder(a);
            EXPECT_NEAR(in.wigner(a), expected, 1e-15);
        }
    }
}

TEST(input_state, mean_photon_number_matches_grid) {
    for (const InputState in : {InputState::fock(2, {0.5, -0.5}), InputState::squeezed(0.5, {0.3, 0.0}),
                                InputState::coherent({1.0, 1.0})}) {
        EXPECT_NEAR(photon_stats(in.to_grid(GridSpec{})).mean, in.mean_photon_number(), 1e-8) << in.label();
    }
}
