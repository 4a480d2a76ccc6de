#include "wplab/wavepacket.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "spectral.hpp"

namespace wplab {

namespace {

constexpr double kBandTailGuard = 1e-8;

// Node index holding the periodic sample of phi at displacement y_j - x_m.
// The origin sits at node N/2, so the wrapped displacement (j - m) h lands on
// node (j - m + N/2) mod N.
inline std::size_t wrap_shift(const UniformGrid& g, std::size_t j, std::size_t m) {
    const int n = g.points();
    if (g.dim() == 1) {
        return (static_cast<int>(j) - static_cast<int>(m) + n / 2 + n) % n;
    }
    const int j0 = static_cast<int>(j) / n, j1 = static_cast<int>(j) % n;
    const int m0 = static_cast<int>(m) / n, m1 = static_cast<int>(m) % n;
    return g.flat((j0 - m0 + n / 2 + n) % n, (j1 - m1 + n / 2 + n) % n);
}

double phase_weight(const UniformGrid& g) {
    // (dxi)^n (2pi)^-n, the discrete dbar(xi) measure.
    return std::pow(g.freq_spacing() / (2.0 * std::numbers::pi), g.dim());
}

}  // namespace

PhaseSpaceField wpt(const Field& f, const Field& phi) {
    if (f.grid != phi.grid) throw std::invalid_argument("wpt: f and phi live on different grids");
    const double phi_l2 = l2_norm(phi);
    if (!(phi_l2 > 0.0)) throw std::invalid_argument("wpt: window is identically zero");

    if (band_tail_fraction(f) > kBandTailGuard)
        std::fprintf(stderr, "wplab: warning: wpt input is not numerically band-limited\n");

    const UniformGrid& g = f.grid;
    const std::size_t sz = g.size();
    PhaseSpaceField out;
    out.x_grid = g;
    out.xi_grid = g;
    out.window_l2 = phi_l2;
    out.values.resize(sz * sz);

    const detail::Radix2FFT fft(g.points());
    detail::parallel_for(sz, [&](std::size_t m) {
        std::vector<cplx> scratch;
        cplx* slice = out.values.data() + m * sz;
        for (std::size_t j = 0; j < sz; ++j)
            slice[j] = std::conj(phi.values[wrap_shift(g, j, m)]) * f.values[j];
        detail::forward_in_place(g, slice, fft, scratch);
    });
    assert_finite(out.values, "wpt");
    return out;
}

Field iwpt(const PhaseSpaceField& F, const Field& phi) {
    const UniformGrid& g = phi.grid;
    if (F.x_grid != g || F.xi_grid != g)
        throw std::invalid_argument("iwpt: phase-space field and window grids are incompatible");
    if (F.values.size() != g.size() * g.size())
        throw std::invalid_argument("iwpt: phase-space value count mismatch");

    const std::size_t sz = g.size();
    // Per y-node inverse transforms of the xi slices, then the weighted sum
    // over y with the window reattached. Fixed summation order keeps the
    // result independent of the parallel schedule.
    std::vector<cplx> slices = F.values;
    const detail::Radix2FFT fft(g.points());
    detail::parallel_for(sz, [&](std::size_t m) {
        std::vector<cplx> scratch;
        detail::inverse_in_place(g, slices.data() + m * sz, fft, scratch);
    });

    Field out{g, std::vector<cplx>(sz), phi.time_tag};
    const double wx = std::pow(g.spacing(), g.dim());
    detail::parallel_for(sz, [&](std::size_t l) {
        cplx acc(0.0);
        for (std::size_t m = 0; m < sz; ++m)
            acc += phi.values[wrap_shift(g, l, m)] * slices[m * sz + l];
        out.values[l] = wx * acc;
    });
    assert_finite(out.values, "iwpt");
    return out;
}

Field reconstruct(const PhaseSpaceField& F, const Field& phi) {
    const double l2 = l2_norm(phi);
    if (!(l2 > 0.0)) throw std::invalid_argument("reconstruct: window is identically zero");
    Field out = iwpt(F, phi);
    const double scale = 1.0 / (l2 * l2);
    for (auto& z : out.values) z *= scale;
    return out;
}

MixedNormReport mod_norm(const PhaseSpaceField& F, double p, double q) {
    const bool p_inf = std::isinf(p);
    const bool q_inf = std::isinf(q);
    if ((!p_inf && !(p >= 1.0)) || (!q_inf && !(q >= 1.0)) || std::isnan(p) || std::isnan(q))
        throw std::invalid_argument("mod_norm: exponents must lie in [1, inf]");

    const UniformGrid& gx = F.x_grid;
    const UniformGrid& gxi = F.xi_grid;
    const std::size_t nx = F.x_count(), nxi = F.xi_count();
    const double wx = std::pow(gx.spacing(), gx.dim());

    // Inner L^p over x at each xi node (x is the slow index, so accumulate
    // across slices).
    std::vector<double> inner(nxi, 0.0);
    for (std::size_t m = 0; m < nx; ++m) {
        const cplx* slice = F.values.data() + m * nxi;
        if (p_inf) {
            for (std::size_t k = 0; k < nxi; ++k) inner[k] = std::max(inner[k], std::abs(slice[k]));
        } else if (p == 1.0) {
            for (std::size_t k = 0; k < nxi; ++k) inner[k] += std::abs(slice[k]);
        } else if (p == 2.0) {
            for (std::size_t k = 0; k < nxi; ++k) inner[k] += std::norm(slice[k]);
        } else {
            for (std::size_t k = 0; k < nxi; ++k) inner[k] += std::pow(std::abs(slice[k]), p);
        }
    }
    if (!p_inf)
        for (auto& v : inner) v = std::pow(v * wx, 1.0 / p);

    double value = 0.0;
    if (q_inf) {
        for (const double v : inner) value = std::max(value, v);
    } else {
        const double wxi = phase_weight(gxi);
        double acc = 0.0;
        if (q == 1.0) {
            for (const double v : inner) acc += v;
        } else if (q == 2.0) {
            for (const double v : inner) acc += v * v;
        } else {
            for (const double v : inner) acc += std::pow(v, q);
        }
        value = std::pow(acc * wxi, 1.0 / q);
    }

    MixedNormReport rep;
    rep.p = p;
    rep.q = q;
    rep.value = value;
    rep.dim = gx.dim();
    rep.points = gx.points();
    rep.half_width = gx.half_width();
    if (!std::isfinite(rep.value)) throw std::runtime_error("mod_norm: non-finite norm value");
    return rep;
}

cplx wpt_point(const Field& f, const WindowSpec& window, double x0, double xi0,
               double x1, double xi1) {
    const UniformGrid& g = f.grid;
    const double amp = std::pow(window.lambda, g.dim() / 2.0);
    const double wx = std::pow(g.spacing(), g.dim());
    cplx acc(0.0);
    double y0, y1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        g.coords(j, y0, y1);
        const cplx w = window_value(window, y0 - x0, g.dim() == 2 ? y1 - x1 : 0.0);
        const double phase = -(y0 * xi0 + y1 * xi1);
        acc += std::conj(amp * w) * f.values[j] * std::polar(1.0, phase);
    }
    return acc * wx;
}

cplx inner_space(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw std::invalid_argument("inner_space: grid mismatch");
    cplx acc(0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) acc += std::conj(a.values[i]) * b.values[i];
    return acc * std::pow(a.grid.spacing(), a.grid.dim());
}

cplx inner_phase(const PhaseSpaceField& A, const PhaseSpaceField& B) {
    if (A.x_grid != B.x_grid || A.xi_grid != B.xi_grid || A.values.size() != B.values.size())
        throw std::invalid_argument("inner_phase: phase-space layout mismatch");
    cplx acc(0.0);
    for (std::size_t i = 0; i < A.values.size(); ++i) acc += std::conj(A.values[i]) * B.values[i];
    const double w = std::pow(A.x_grid.spacing(), A.x_grid.dim()) * phase_weight(A.xi_grid);
    return acc * w;
}

}  // namespace wplab
