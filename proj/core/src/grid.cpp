#include "cvtele/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvtele/errors.hpp"

namespace cvtele {

void GridSpec::validate() const {
    if (!(extent > 0.0) || !std::isfinite(extent)) {
        throw ConfigurationError("grid extent must be positive and finite, got " + std::to_string(extent));
    }
    if (resolution < 3) {
        throw ConfigurationError("grid resolution must be at least 3 points per axis");
    }
}

WignerGrid::WignerGrid(GridSpec spec, double sigma, bool pure_origin)
    : spec_(spec), sigma_(sigma), pure_origin_(pure_origin) {
    spec_.validate();
    if (!(sigma >= -1.0 && sigma <= 1.0)) {
        throw ConfigurationError("sigma must lie in [-1, 1]");
    }
    values_.assign(spec_.resolution * spec_.resolution, 0.0);
}

WignerGrid WignerGrid::sample(GridSpec spec, double sigma, bool pure_origin,
                              const std::function<double(Complex)>& f) {
    WignerGrid g(spec, sigma, pure_origin);
    const std::size_t n = spec.resolution;
    for (std::size_t ir = 0; ir < n; ++ir) {
        for (std::size_t ii = 0; ii < n; ++ii) {
            g.at(ir, ii) = f(g.alpha(ir, ii));
        }
    }
    return g;
}

void WignerGrid::relabel_sigma(double sigma) {
    if (!(sigma >= -1.0 && sigma <= 1.0)) {
        throw ConfigurationError("sigma must lie in [-1, 1]");
    }
    sigma_ = sigma;
}

double WignerGrid::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double WignerGrid::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

double sup_norm_difference(const WignerGrid& a, const WignerGrid& b) {
    if (!(a.spec() == b.spec())) {
        throw ConfigurationError("grid geometry mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k) {
        worst = std::max(worst, std::abs(a.values()[k] - b.values()[k]));
    }
    return worst;
}

}  // namespace cvtele
