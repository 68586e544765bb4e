#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cvtele {

using Complex = std::complex<double>;

// Square phase-space window [-extent, extent]^2 sampled with `resolution`
// points per axis, endpoints included.
struct GridSpec {
    double extent = 6.0;
    std::size_t resolution = 256;

    double spacing() const { return 2.0 * extent / static_cast<double>(resolution - 1); }
    double coordinate(std::size_t i) const { return -extent + spacing() * static_cast<double>(i); }
    double cell_area() const { return spacing() * spacing(); }

    // Throws ConfigurationError for a degenerate window.
    void validate() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// A sampled single-mode quasiprobability R_sigma(alpha) with
// alpha = alpha_r + i alpha_i. sigma = 1 is P, 0 is Wigner, -1 is Q.
class WignerGrid {
public:
    WignerGrid(GridSpec spec, double sigma, bool pure_origin = false);

    // Samples f(alpha) at every node.
    static WignerGrid sample(GridSpec spec, double sigma, bool pure_origin,
                             const std::function<double(Complex)>& f);

    const GridSpec& spec() const { return spec_; }
    double sigma() const { return sigma_; }
    // Changes the ordering label only; the caller is responsible for the values.
    void relabel_sigma(double sigma);
    std::size_t resolution() const { return spec_.resolution; }

    // True when the grid describes a pure state; fidelity as a Wigner overlap
    // is only defined against such an original.
    bool pure_origin() const { return pure_origin_; }
    void set_pure_origin(bool pure) { pure_origin_ = pure; }

    // ir indexes alpha_r, ii indexes alpha_i.
    double& at(std::size_t ir, std::size_t ii) { return values_[ir * spec_.resolution + ii]; }
    double at(std::size_t ir, std::size_t ii) const { return values_[ir * spec_.resolution + ii]; }
    Complex alpha(std::size_t ir, std::size_t ii) const {
        return {spec_.coordinate(ir), spec_.coordinate(ii)};
    }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double min_value() const;
    double max_value() const;

private:
    GridSpec spec_;
    double sigma_;
    bool pure_origin_;
    std::vector<double> values_;
};

// Largest pointwise |a - b| over two grids of identical geometry.
double sup_norm_difference(const WignerGrid& a, const WignerGrid& b);

}  // namespace cvtele
