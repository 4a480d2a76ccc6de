#include "wplab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectral.hpp"

namespace wplab {

UniformGrid UniformGrid::make(int dim, double half_width, int points) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("UniformGrid: dim must be 1 or 2");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("UniformGrid: half_width must be positive");
    if (!detail::is_power_of_two(points) || points < 16)
        throw std::invalid_argument("UniformGrid: points must be a power of two >= 16");
    UniformGrid g;
    g.dim_ = dim;
    g.half_width_ = half_width;
    g.points_ = points;
    g.spacing_ = 2.0 * half_width / points;
    g.freq_spacing_ = std::numbers::pi / half_width;
    g.size_ = 1;
    for (int d = 0; d < dim; ++d) g.size_ *= static_cast<std::size_t>(points);
    return g;
}

Field make_field(const UniformGrid& g, const std::function<cplx(double)>& fn, double time_tag) {
    if (g.dim() != 1) throw std::invalid_argument("make_field: expected a 1-d grid");
    Field f{g, std::vector<cplx>(g.size()), time_tag};
    for (int i = 0; i < g.points(); ++i) f.values[i] = fn(g.coord(i));
    return f;
}

Field make_field2(const UniformGrid& g, const std::function<cplx(double, double)>& fn,
                  double time_tag) {
    if (g.dim() != 2) throw std::invalid_argument("make_field2: expected a 2-d grid");
    Field f{g, std::vector<cplx>(g.size()), time_tag};
    for (int i0 = 0; i0 < g.points(); ++i0)
        for (int i1 = 0; i1 < g.points(); ++i1)
            f.values[g.flat(i0, i1)] = fn(g.coord(i0), g.coord(i1));
    return f;
}

void assert_finite(std::span<const cplx> values, const char* op) {
    for (const auto& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::runtime_error(std::string(op) + ": non-finite field entry");
}

namespace detail {

namespace {

// One spatial-to-spectral line: natural order in, monotone frequency order
// out. The node offset -L shows up as the alternating sign (-1)^k since
// L * dxi = pi exactly.
void line_forward(cplx* line, std::ptrdiff_t stride, int n, double h,
                  const Radix2FFT& fft, std::vector<cplx>& scratch) {
    scratch.resize(n);
    for (int j = 0; j < n; ++j) scratch[j] = line[j * stride];
    fft.forward(scratch);
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        const int m = (i + n / 2) & (n - 1);
        const double sign = (k % 2 != 0) ? -1.0 : 1.0;
        line[i * stride] = h * sign * scratch[m];
    }
}

void line_inverse(cplx* line, std::ptrdiff_t stride, int n, double h,
                  const Radix2FFT& fft, std::vector<cplx>& scratch) {
    scratch.assign(n, cplx(0.0));
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        const int m = (i + n / 2) & (n - 1);
        const double sign = (k % 2 != 0) ? -1.0 : 1.0;
        scratch[m] = sign * line[i * stride];
    }
    fft.inverse_unnormalized(scratch);
    const double scale = 1.0 / (n * h);
    for (int j = 0; j < n; ++j) line[j * stride] = scale * scratch[j];
}

}  // namespace

void forward_in_place(const UniformGrid& g, cplx* data, const Radix2FFT& fft,
                      std::vector<cplx>& scratch) {
    const int n = g.points();
    const double h = g.spacing();
    if (g.dim() == 1) {
        line_forward(data, 1, n, h, fft, scratch);
        return;
    }
    for (int r = 0; r < n; ++r) line_forward(data + static_cast<std::size_t>(r) * n, 1, n, h, fft, scratch);
    for (int c = 0; c < n; ++c) line_forward(data + c, n, n, h, fft, scratch);
}

void inverse_in_place(const UniformGrid& g, cplx* data, const Radix2FFT& fft,
                      std::vector<cplx>& scratch) {
    const int n = g.points();
    const double h = g.spacing();
    if (g.dim() == 1) {
        line_inverse(data, 1, n, h, fft, scratch);
        return;
    }
    for (int r = 0; r < n; ++r) line_inverse(data + static_cast<std::size_t>(r) * n, 1, n, h, fft, scratch);
    for (int c = 0; c < n; ++c) line_inverse(data + c, n, n, h, fft, scratch);
}

}  // namespace detail

Field fourier_forward(const Field& f) {
    Field out = f;
    const detail::Radix2FFT fft(f.grid.points());
    std::vector<cplx> scratch;
    detail::forward_in_place(out.grid, out.values.data(), fft, scratch);
    assert_finite(out.values, "fourier_forward");
    return out;
}

Field fourier_inverse(const Field& F) {
    Field out = F;
    const detail::Radix2FFT fft(F.grid.points());
    std::vector<cplx> scratch;
    detail::inverse_in_place(out.grid, out.values.data(), fft, scratch);
    assert_finite(out.values, "fourier_inverse");
    return out;
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (const auto& z : f.values) s += std::norm(z);
    const double weight = std::pow(f.grid.spacing(), f.grid.dim());
    return std::sqrt(s * weight);
}

double l2_distance(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw std::invalid_argument("l2_distance: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += std::norm(a.values[i] - b.values[i]);
    const double weight = std::pow(a.grid.spacing(), a.grid.dim());
    return std::sqrt(s * weight);
}

double boundary_mass_fraction(const Field& f) {
    const int n = f.grid.points();
    double total = 0.0, near = 0.0;
    int i0, i1;
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        const double m = std::norm(f.values[idx]);
        total += m;
        f.grid.unflat(idx, i0, i1);
        const bool edge0 = i0 < 4 || i0 >= n - 4;
        const bool edge1 = f.grid.dim() == 2 && (i1 < 4 || i1 >= n - 4);
        if (edge0 || edge1) near += m;
    }
    return total > 0.0 ? near / total : 0.0;
}

double band_tail_fraction(const Field& f) {
    const Field F = fourier_forward(f);
    const int n = f.grid.points();
    const int band = n / 4;  // keep |k - N/2| <= N/4 per axis
    double total = 0.0, tail = 0.0;
    int i0, i1;
    for (std::size_t idx = 0; idx < F.values.size(); ++idx) {
        const double m = std::norm(F.values[idx]);
        total += m;
        F.grid.unflat(idx, i0, i1);
        const bool out0 = std::abs(i0 - n / 2) > band;
        const bool out1 = f.grid.dim() == 2 && std::abs(i1 - n / 2) > band;
        if (out0 || out1) tail += m;
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace wplab
