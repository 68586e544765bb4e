#include "cvtele/protocol.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "cvtele/errors.hpp"

namespace cvtele {

namespace {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Mat24 = Eigen::Matrix<double, 2, 4>;

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Exponent -x^T A x + 2 b^T x + c, accumulated term by term.
struct QuadraticForm {
    Mat4 A = Mat4::Zero();
    Vec4 b = Vec4::Zero();
    double c = 0.0;

    // Adds -(M x + t)^T Q (M x + t).
    template <int R>
    void add(const Eigen::Matrix<double, R, 4>& M, const Eigen::Matrix<double, R, 1>& t,
             const Eigen::Matrix<double, R, R>& Q) {
        A += M.transpose() * Q * M;
        b -= M.transpose() * Q * t;
        c -= t.dot(Q * t);
    }
};

// Channel exponent in z = (Re b, Re c, Im b, Im c) is -z^T Q z.
Mat4 channel_precision(const GaussianTwoMode& ch) {
    const double s = 2.0 / ch.det();
    Mat4 q = Mat4::Zero();
    q(0, 0) = q(1, 1) = q(2, 2) = q(3, 3) = s * ch.gamma;
    q(0, 1) = q(1, 0) = -s * ch.lam;
    q(2, 3) = q(3, 2) = s * ch.lam;
    return q;
}

Eigen::Matrix2d envelope_precision(const InputState& in) {
    const auto [pr, pi] = in.envelope_precision();
    Eigen::Matrix2d p = Eigen::Matrix2d::Zero();
    p(0, 0) = pr;
    p(1, 1) = pi;
    return p;
}

void require_order(const InputState& input, const ProtocolOptions& options) {
    if (2 * options.order - 1 < input.remainder_degree()) {
        throw AccuracyError(fmt::format("Gauss-Hermite order {} cannot integrate a degree-{} remainder exactly",
                                        options.order, input.remainder_degree()));
    }
}

// Integration variables x = (Re d, Im d, Re e, Im e).
//   a = (d - e)/sqrt2, b = (d + e)/sqrt2, c = gamma + sqrt2 Re e - i sqrt2 Im d
Mat4 oracle_channel_map() {
    Mat4 m;
    m << kInvSqrt2, 0, kInvSqrt2, 0,  //
        0, 0, kSqrt2, 0,              //
        0, kInvSqrt2, 0, kInvSqrt2,   //
        0, -kSqrt2, 0, 0;
    return m;
}

Mat24 oracle_input_map() {
    Mat24 m;
    m << kInvSqrt2, 0, -kInvSqrt2, 0,  //
        0, kInvSqrt2, 0, -kInvSqrt2;
    return m;
}

QuadraticForm oracle_form(const InputState& input, const GaussianTwoMode& ch, Complex gamma) {
    QuadraticForm form;
    const Vec4 t(0.0, gamma.real(), 0.0, gamma.imag());
    form.add<4>(oracle_channel_map(), t, channel_precision(ch));
    const Eigen::Vector2d mu(input.displacement().real(), input.displacement().imag());
    form.add<2>(oracle_input_map(), -mu, envelope_precision(input));
    return form;
}

// Integration variables x = (Re d, Im e, Re c, Im c) with Im d = X and
// Re e = Y held fixed.
Mat4 density_channel_map() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = kInvSqrt2;  // Re b
    m(1, 2) = 1.0;        // Re c
    m(2, 1) = kInvSqrt2;  // Im b
    m(3, 3) = 1.0;        // Im c
    return m;
}

Mat24 density_input_map() {
    Mat24 m = Mat24::Zero();
    m(0, 0) = kInvSqrt2;   // Re a
    m(1, 1) = -kInvSqrt2;  // Im a
    return m;
}

QuadraticForm density_form(const InputState& input, const GaussianTwoMode& ch, double x, double y) {
    QuadraticForm form;
    const Vec4 t(kInvSqrt2 * y, 0.0, kInvSqrt2 * x, 0.0);
    form.add<4>(density_channel_map(), t, channel_precision(ch));
    const Eigen::Vector2d offset(-kInvSqrt2 * y, kInvSqrt2 * x);
    const Eigen::Vector2d mu(input.displacement().real(), input.displacement().imag());
    form.add<2>(density_input_map(), offset - mu, envelope_precision(input));
    return form;
}

}  // namespace

ProtocolOracle::ProtocolOracle(const InputState& input, const GaussianTwoMode& channel, ProtocolOptions options)
    : input_(input),
      channel_(channel),
      quadrature_((channel.validate(), require_order(input, options), oracle_form(input, channel, {}).A),
                  options.order, options.prune) {}

double ProtocolOracle::operator()(Complex gamma) const {
    const QuadraticForm form = oracle_form(input_, channel_, gamma);
    const Mat24 to_a = oracle_input_map();
    const double value = quadrature_.integrate(form.b, form.c, [&](const Vec4& x) {
        const Eigen::Vector2d a = to_a * x;
        return input_.remainder({a(0), a(1)});
    });
    return channel_.norm() * value;
}

WignerGrid ProtocolOracle::grid(const GridSpec& spec) const {
    return WignerGrid::sample(spec, 0.0, false, [this](Complex g) { return (*this)(g); });
}

WignerGrid protocol_oracle(const InputState& input, const GaussianTwoMode& channel, const GridSpec& spec,
                           ProtocolOptions options) {
    return ProtocolOracle(input, channel, options).grid(spec);
}

MeasurementDensity::MeasurementDensity(const InputState& input, const GaussianTwoMode& channel,
                                       ProtocolOptions options)
    : input_(input),
      channel_(channel),
      quadrature_((channel.validate(), require_order(input, options), density_form(input, channel, 0.0, 0.0).A),
                  options.order, options.prune) {}

double MeasurementDensity::operator()(double x, double y) const {
    const QuadraticForm form = density_form(input_, channel_, x, y);
    const Mat24 to_a = density_input_map();
    const Eigen::Vector2d offset(-kInvSqrt2 * y, kInvSqrt2 * x);
    const double value = quadrature_.integrate(form.b, form.c, [&](const Vec4& v) {
        const Eigen::Vector2d a = to_a * v + offset;
        return input_.remainder({a(0), a(1)});
    });
    return channel_.norm() * value;
}

double measurement_density(const InputState& input, const GaussianTwoMode& channel, double x, double y,
                           ProtocolOptions options) {
    return MeasurementDensity(input, channel, options)(x, y);
}

}  // namespace cvtele
