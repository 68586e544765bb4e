#include "cvtele/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cvtele/errors.hpp"
#include "verify/oracles.hpp"

using namespace cvtele;

TEST(evolve_channel, start_and_end) {
    for (double s : {0.0, 0.5, 1.3}) {
        const GaussianTwoMode g = evolve_channel({s, 0.7, 0.0});
        const GaussianTwoMode ref = two_mode_squeezed_vacuum(s);
        EXPECT_NEAR(g.gamma, ref.gamma, 1e-15);
        EXPECT_NEAR(g.lam, ref.lam, 1e-15);

        const GaussianTwoMode end = evolve_channel({s, 0.7, 1.0});
        EXPECT_NEAR(end.gamma, 2.4, 1e-15);
        EXPECT_EQ(end.lam, 0.0);
    }
}

TEST(evolve_channel, matches_moment_flow) {
    const GaussianTwoMode g = evolve_channel({1.0, 0.5, 0.5});
    EXPECT_NEAR(g.gamma, 2.88110, 5e-6);
    EXPECT_NEAR(g.lam, 1.81343, 5e-6);
    const GaussianTwoMode flow = oracle::moment_flow({1.0, 0.5, 0.5});
    EXPECT_NEAR(g.gamma, flow.gamma, 1e-6);
    EXPECT_NEAR(g.lam, flow.lam, 1e-6);
}

TEST(evolve_channel, output_is_physical) {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> us(0.0, 3.0), un(0.0, 5.0), ut(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        EXPECT_NO_THROW(evolve_channel({us(rng), un(rng), ut(rng)}).validate());
    }
}

TEST(channel_params, validation) {
    EXPECT_THROW((ChannelParams{-0.1, 0.0, 0.0}.validate()), ConfigurationError);
    EXPECT_THROW((ChannelParams{0.0, -1.0, 0.0}.validate()), ConfigurationError);
    EXPECT_THROW((ChannelParams{0.0, 0.0, 1.5}.validate()), ConfigurationError);
    EXPECT_THROW((ChannelParams{0.0, 0.0, NAN}.validate()), ConfigurationError);
    EXPECT_NEAR(renormalized_time(std::log(2.0)), 0.5, 1e-15);
}

TEST(noise_factor, examples) {
    for (double t : {0.0, 0.3, 1.0}) EXPECT_NEAR(noise_factor({0.0, 0.0, t}).value, 1.0, 1e-15);
    EXPECT_NEAR(noise_factor({1.0, 0.0, 0.0}).value, std::exp(-2.0), 1e-15);
    EXPECT_NEAR(noise_factor({1.0, 0.0, 0.0}).value, 0.13534, 5e-6);
    EXPECT_NEAR(noise_factor({1.0, 1.0, 0.5}).value, 1.56767, 5e-6);
    const GaussianTwoMode g = evolve_channel({1.0, 1.0, 0.5});
    EXPECT_NEAR(noise_factor({1.0, 1.0, 0.5}).value, g.gamma - g.lam, 1e-12);
    EXPECT_EQ(noise_factor({1.0, 1.0, 0.5}).kind, NoiseFactor::Kind::Teleport);
}

TEST(noise_factor, bounds_and_monotonicity) {
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> us(0.0, 3.0), un(0.0, 5.0);
    for (int k = 0; k < 20; ++k) {
        const double s = us(rng), nb = un(rng);
        double previous = -1.0;
        for (int j = 0; j < 50; ++j) {
            const double t = j / 49.0;
            const double n = noise_factor({s, nb, t}).value;
            EXPECT_GE(n, previous - 1e-15);
            EXPECT_GE(n, std::exp(-2.0 * s) - 1e-15);
            EXPECT_LE(n, 2.0 * nb + 1.0 + 1e-12);
            previous = n;
            // More initial squeezing never hurts.
            const double h = 1e-6;
            EXPECT_LE(noise_factor({s + h, nb, t}).value - n, 1e-15);
        }
    }
}

TEST(is_separable, examples) {
    EXPECT_FALSE(is_separable({0.5, 0.0, 0.0}));
    for (double s : {0.0, 0.7, 2.0}) EXPECT_TRUE(is_separable({s, 0.3, 1.0}));
    for (double t : {0.0, 0.5, 0.99}) EXPECT_FALSE(is_separable({0.4, 0.0, t}));
    EXPECT_TRUE(is_separable({0.0, 0.0, 0.0}));  // n_tau = 1 exactly
}

TEST(direct_noise, examples) {
    EXPECT_EQ(direct_noise(0.0, 0.7).value, 0.0);
    EXPECT_EQ(direct_noise(1.7, 1.0).value, 1.7);
    EXPECT_NEAR(direct_noise(2.0, 0.3).value, 0.6, 1e-15);
    EXPECT_EQ(direct_noise(2.0, 0.3).kind, NoiseFactor::Kind::Direct);
}

TEST(teleport_vs_direct_gap, examples) {
    EXPECT_NEAR(teleport_vs_direct_gap({1.0, 2.0, 0.0}), std::exp(-2.0), 1e-15);
    EXPECT_NEAR(teleport_vs_direct_gap({1.0, 0.0, 0.0}), 0.13534, 5e-6);
    for (double t : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(teleport_vs_direct_gap({30.0, 0.0, t}), 1.0 - std::sqrt(1.0 - t), 1e-12);
    }
}

TEST(teleport_vs_direct_gap, identity_and_sign) {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> us(0.0, 3.0), un(0.0, 5.0), ut(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const ChannelParams p{us(rng), un(rng), ut(rng)};
        const double gap = teleport_vs_direct_gap(p);
        const double via_noise =
            noise_factor({p.s_qc, p.n_bar, 1.0 - std::sqrt(1.0 - p.T)}).value - direct_noise(p.n_bar, p.T).value;
        EXPECT_NEAR(gap, via_noise, 1e-12);
        EXPECT_GE(gap, 0.0);
    }
}
