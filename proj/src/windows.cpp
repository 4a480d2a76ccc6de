#include "wplab/windows.hpp"

#include <cmath>
#include <stdexcept>

namespace wplab {

cplx window_value(const WindowSpec& spec, double x0, double x1) {
    const double lam = spec.lambda;
    const double s2 = spec.width * spec.width;
    switch (spec.kind) {
        case WindowKind::gaussian: {
            const double r2 = (lam * x0) * (lam * x0) + (lam * x1) * (lam * x1);
            return std::exp(-r2 / (2.0 * s2));
        }
        case WindowKind::hermite1: {
            const double r2 = (lam * x0) * (lam * x0) + (lam * x1) * (lam * x1);
            return (lam * x0) * std::exp(-r2 / (2.0 * s2));
        }
        case WindowKind::custom:
            throw std::invalid_argument("window_value: custom windows have no analytic form");
    }
    return 0.0;
}

Field make_window(WindowSpec& spec, const UniformGrid& grid) {
    if (!(spec.width > 0.0)) throw std::invalid_argument("make_window: width must be positive");
    if (!(spec.lambda > 0.0)) throw std::invalid_argument("make_window: lambda must be positive");

    Field phi{grid, std::vector<cplx>(grid.size()), 0.0};
    if (spec.kind == WindowKind::custom) {
        if (spec.custom_samples.size() != grid.size())
            throw std::invalid_argument("make_window: custom sample count does not match grid");
        phi.values = spec.custom_samples;
    } else {
        const double amp = std::pow(spec.lambda, grid.dim() / 2.0);
        double x0, x1;
        for (std::size_t idx = 0; idx < grid.size(); ++idx) {
            grid.coords(idx, x0, x1);
            phi.values[idx] = amp * window_value(spec, x0, x1);
        }
    }
    assert_finite(phi.values, "make_window");
    spec.l2_norm = l2_norm(phi);
    if (spec.l2_norm <= 0.0) throw std::invalid_argument("make_window: window is identically zero");
    return phi;
}

Field evolve_window(const Field& phi0, double t) {
    if (t == 0.0) return phi0;
    Field spec = fourier_forward(phi0);
    double k0, k1;
    for (std::size_t idx = 0; idx < spec.values.size(); ++idx) {
        spec.grid.freqs(idx, k0, k1);
        spec.values[idx] *= std::polar(1.0, -0.5 * t * (k0 * k0 + k1 * k1));
    }
    Field out = fourier_inverse(spec);
    out.time_tag = phi0.time_tag + t;
    return out;
}

Field moment_window(const Field& phi, int k, int l) {
    if (k < 0 || k >= phi.grid.dim() || l < 0 || l >= phi.grid.dim())
        throw std::invalid_argument("moment_window: axis out of range");
    Field out = phi;
    double x0, x1;
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        out.grid.coords(idx, x0, x1);
        const double yk = (k == 0) ? x0 : x1;
        const double yl = (l == 0) ? x0 : x1;
        out.values[idx] *= yk * yl;
    }
    return out;
}

}  // namespace wplab
