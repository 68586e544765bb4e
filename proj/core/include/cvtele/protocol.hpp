#pragma once

#include <memory>

#include "cvtele/gaussian_quadrature.hpp"
#include "cvtele/grid.hpp"
#include "cvtele/states.hpp"

namespace cvtele {

struct ProtocolOptions {
    int order = 40;        // Gauss-Hermite points per real dimension
    double prune = 1e-22;  // relative weight below which tensor nodes are dropped
};

// Brute-force evaluation of the continuous-variable teleportation protocol:
// input mode a and channel mode b meet on a 50/50 beam splitter
// (alpha_d, alpha_e) = (alpha_b +/- alpha_a)/sqrt(2); Im alpha_d and Re alpha_e
// are measured and mode c is displaced by -sqrt(2)(Re alpha_e - i Im alpha_d).
// The receiver Wigner function is the 4-D integral over (alpha_d, alpha_e),
// evaluated by Gauss-Hermite quadrature after factoring out the combined
// Gaussian of channel and input envelope.
//
// Shares no code with the convolution route, which is what makes it usable
// as an oracle for it.
class ProtocolOracle {
public:
    // Throws AccuracyError if `order` cannot integrate the input's polynomial
    // remainder exactly.
    ProtocolOracle(const InputState& input, const GaussianTwoMode& channel, ProtocolOptions options = {});

    // W_r at the receiver point gamma.
    double operator()(Complex gamma) const;

    WignerGrid grid(const GridSpec& spec) const;

    std::size_t node_count() const { return quadrature_.node_count(); }

private:
    InputState input_;
    GaussianTwoMode channel_;
    GaussianQuadrature4 quadrature_;
};

WignerGrid protocol_oracle(const InputState& input, const GaussianTwoMode& channel, const GridSpec& spec,
                           ProtocolOptions options = {});

// Joint density of the two homodyne outcomes x = Im alpha_d, y = Re alpha_e:
// the marginal of the post-beam-splitter Wigner function over Re alpha_d,
// Im alpha_e and alpha_c.
class MeasurementDensity {
public:
    MeasurementDensity(const InputState& input, const GaussianTwoMode& channel, ProtocolOptions options = {});

    double operator()(double x, double y) const;

private:
    InputState input_;
    GaussianTwoMode channel_;
    GaussianQuadrature4 quadrature_;
};

double measurement_density(const InputState& input, const GaussianTwoMode& channel, double x, double y,
                           ProtocolOptions options = {});

}  // namespace cvtele
