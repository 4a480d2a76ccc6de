#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wplab {

using cplx = std::complex<double>;

// Uniform periodic grid on [-L, L)^n together with its dual frequency grid.
// N is a power of two per axis; the duality h * dxi * N = 2*pi holds exactly
// (up to the representation of pi), which makes the discrete transform pair
// below an exact inverse of one another.
//
// Frequency nodes are stored in monotonically increasing order,
// xi_k = (k - N/2) * dxi for k = 0..N-1; the reordering to the transform's
// natural layout is internal to fourier_forward / fourier_inverse.
class UniformGrid {
  public:
    UniformGrid() = default;
    // dim in {1,2}, half_width L > 0, points a power of two >= 16 (per axis).
    static UniformGrid make(int dim, double half_width, int points);

    int dim() const { return dim_; }
    double half_width() const { return half_width_; }
    int points() const { return points_; }            // per axis
    double spacing() const { return spacing_; }       // h = 2L/N
    double freq_spacing() const { return freq_spacing_; } // dxi = pi/L
    std::size_t size() const { return size_; }        // N^n

    double coord(int i) const { return -half_width_ + i * spacing_; }
    double freq(int k) const { return (k - points_ / 2) * freq_spacing_; }
    double max_freq() const { return freq(points_ - 1); }

    // Flat row-major indexing, axis 0 slowest. For dim()==1 the flat index is
    // the axis index itself.
    std::size_t flat(int i0, int i1 = 0) const {
        return dim_ == 1 ? static_cast<std::size_t>(i0)
                         : static_cast<std::size_t>(i0) * points_ + i1;
    }
    void unflat(std::size_t idx, int& i0, int& i1) const {
        if (dim_ == 1) { i0 = static_cast<int>(idx); i1 = 0; }
        else { i0 = static_cast<int>(idx / points_); i1 = static_cast<int>(idx % points_); }
    }
    // Coordinates of flat node idx (second component 0 when dim()==1).
    void coords(std::size_t idx, double& x0, double& x1) const {
        int i0, i1; unflat(idx, i0, i1);
        x0 = coord(i0); x1 = dim_ == 1 ? 0.0 : coord(i1);
    }
    void freqs(std::size_t idx, double& k0, double& k1) const {
        int i0, i1; unflat(idx, i0, i1);
        k0 = freq(i0); k1 = dim_ == 1 ? 0.0 : freq(i1);
    }

    bool operator==(const UniformGrid& o) const {
        return dim_ == o.dim_ && points_ == o.points_ && half_width_ == o.half_width_;
    }
    bool operator!=(const UniformGrid& o) const { return !(*this == o); }

  private:
    int dim_ = 0;
    double half_width_ = 0.0;
    int points_ = 0;
    double spacing_ = 0.0;
    double freq_spacing_ = 0.0;
    std::size_t size_ = 0;
};

// Complex samples of a function of x at a fixed time.
struct Field {
    UniformGrid grid;
    std::vector<cplx> values;
    double time_tag = 0.0;
};

// Sample fn(x) (or fn(x0,x1) through the two-argument overload) on the grid.
Field make_field(const UniformGrid& g, const std::function<cplx(double)>& fn,
                 double time_tag = 0.0);
Field make_field2(const UniformGrid& g, const std::function<cplx(double, double)>& fn,
                  double time_tag = 0.0);

// Forward transform in the convention fhat(xi) = integral exp(-i x.xi) f(x) dx,
// discretized as h^n times the DFT over the periodic grid; output sampled at
// the monotone frequency nodes. fourier_inverse carries the (2pi)^-n weight of
// the dual measure so that the pair is an exact round trip.
Field fourier_forward(const Field& f);
Field fourier_inverse(const Field& F);

// Discrete weighted L2 norm (sum |f|^2 h^n)^(1/2).
double l2_norm(const Field& f);
double l2_distance(const Field& a, const Field& b);

// Fraction of |f|^2 mass carried by nodes within 4h of the periodic boundary.
double boundary_mass_fraction(const Field& f);
// Fraction of spectral |fhat|^2 mass outside |xi_axis| <= dxi*N/4 (per axis).
double band_tail_fraction(const Field& f);

// Throws std::runtime_error naming `op` if any entry is non-finite.
void assert_finite(std::span<const cplx> values, const char* op);

}  // namespace wplab
