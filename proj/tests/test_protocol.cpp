#include "cvtele/protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cvtele/channel.hpp"
#include "cvtele/errors.hpp"
#include "cvtele/teleport.hpp"

using namespace cvtele;
using std::numbers::pi;

namespace {

// A coarse lattice of receiver points covering the bulk of the output.
std::vector<Complex> probe_points() {
    std::vector<Complex> out;
    for (double x = -3.0; x <= 3.0; x += 1.0)
        for (double y = -3.0; y <= 3.0; y += 1.5) out.emplace_back(x, y);
    return out;
}

}  // namespace

TEST(protocol_oracle, vacuum_through_pure_channel) {
    const GaussianTwoMode ch = two_mode_squeezed_vacuum(0.5);
    const ProtocolOracle oracle(InputState::vacuum(), ch);
    const double n = std::exp(-1.0);
    for (Complex g : probe_points()) {
        EXPECT_NEAR(oracle(g), teleported_fock_value(0, n, g), 1e-5) << g;
    }
}

TEST(protocol_oracle, fock_one_through_mixed_channel) {
    const GaussianTwoMode ch = evolve_channel({1.0, 0.5, 0.5});
    EXPECT_NEAR(ch.noise_factor(), 1.06767, 5e-6);
    const ProtocolOracle oracle(InputState::fock(1), ch);
    for (Complex g : probe_points()) {
        EXPECT_NEAR(oracle(g), teleported_fock_value(1, ch.noise_factor(), g), 1e-5) << g;
    }
}

TEST(protocol_oracle, uncorrelated_channel) {
    const double nbar = 0.4;
    const GaussianTwoMode ch = evolve_channel({0.9, nbar, 1.0});
    ASSERT_EQ(ch.lam, 0.0);
    const ProtocolOracle oracle(InputState::squeezed(0.3), ch);
    for (Complex g : probe_points()) {
        EXPECT_NEAR(oracle(g), teleported_squeezed_value(0.3, 2.0 * nbar + 1.0, g), 1e-5) << g;
    }
    // With no correlation left the output of a rotation-invariant input is
    // rotation invariant too.
    const ProtocolOracle vac(InputState::vacuum(), ch);
    for (double theta : {0.3, 1.1, 2.5}) {
        EXPECT_NEAR(vac(std::polar(1.2, theta)), vac({1.2, 0.0}), 1e-12);
    }
}

TEST(protocol_oracle, displaced_input_lands_displaced) {
    const InputState in = InputState::fock(1, {0.8, -0.4});
    const GaussianTwoMode ch = evolve_channel({0.7, 0.2, 0.3});
    const ProtocolOracle oracle(in, ch);
    for (Complex g : probe_points()) {
        EXPECT_NEAR(oracle(g), teleported_fock_value(1, ch.noise_factor(), g - in.displacement()), 1e-5) << g;
    }
}

TEST(protocol_oracle, grid_output) {
    const GridSpec small{4.0, 9};
    const GaussianTwoMode ch = evolve_channel({0.5, 0.0, 0.2});
    const WignerGrid g = protocol_oracle(InputState::fock(2), ch, small);
    EXPECT_EQ(g.sigma(), 0.0);
    EXPECT_LT(sup_norm_difference(g, teleported_fock_wigner(2, ch.noise_factor(), small)), 1e-5);
}

TEST(protocol_oracle, order_too_low) {
    EXPECT_THROW(ProtocolOracle(InputState::fock(30), two_mode_squeezed_vacuum(0.5), {10, 1e-22}), AccuracyError);
    EXPECT_NO_THROW(ProtocolOracle(InputState::fock(9), two_mode_squeezed_vacuum(0.5), {10, 1e-22}));
}

TEST(measurement_density, vacuum_through_unsqueezed_channel) {
    const MeasurementDensity d(InputState::vacuum(), two_mode_squeezed_vacuum(0.0), {10, 1e-22});
    // Each outcome is a quadrature of a 50/50 mix of two vacua: variance 1/4.
    for (double x : {-1.0, 0.0, 0.5})
        for (double y : {-0.5, 0.0, 1.5}) {
            EXPECT_NEAR(d(x, y), 2.0 / pi * std::exp(-2.0 * (x * x + y * y)), 1e-12);
        }
}

TEST(measurement_density, coherent_shift) {
    // alpha_e = (alpha_b - alpha_a)/sqrt(2): a mean of 1 in mode a moves
    // Re alpha_e by -1/sqrt(2).
    const MeasurementDensity d(InputState::coherent({1.0, 0.0}), two_mode_squeezed_vacuum(0.0), {10, 1e-22});
    const int points = 81;
    const double half = 5.0, h = 2.0 * half / (points - 1);
    double mass = 0.0, mean_y = 0.0, mean_x = 0.0, lowest = 0.0;
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
            const double x = -half + i * h, y = -half + j * h;
            const double v = d(x, y);
            lowest = std::min(lowest, v);
            mass += v;
            mean_x += x * v;
            mean_y += y * v;
        }
    mass *= h * h;
    EXPECT_NEAR(mass, 1.0, 1e-5);
    EXPECT_NEAR(mean_y * h * h, -1.0 / std::sqrt(2.0), 1e-6);
    EXPECT_NEAR(mean_x * h * h, 0.0, 1e-9);
    EXPECT_GE(lowest, -1e-9);
    EXPECT_NEAR(measurement_density(InputState::coherent({1.0, 0.0}), two_mode_squeezed_vacuum(0.0), 0.2, -0.3, {10, 1e-22}),
                d(0.2, -0.3), 1e-15);
}

TEST(measurement_density, nonnegative_for_negative_wigner_input) {
    const MeasurementDensity d(InputState::fock(3), evolve_channel({1.0, 0.3, 0.4}), {12, 1e-22});
    for (double x = -3.0; x <= 3.0; x += 0.25)
        for (double y = -3.0; y <= 3.0; y += 0.25) EXPECT_GE(d(x, y), -1e-9) << x << " " << y;
}
