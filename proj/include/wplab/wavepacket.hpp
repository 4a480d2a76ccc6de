#pragma once

#include <vector>

#include "wplab/grid.hpp"
#include "wplab/windows.hpp"

namespace wplab {

// Dense samples of W_phi f over the product of the spatial nodes of x_grid
// and the frequency nodes of xi_grid. Storage is row-major with the x node
// slowest: values[m * xi_count + k].
struct PhaseSpaceField {
    UniformGrid x_grid;
    UniformGrid xi_grid;
    std::vector<cplx> values;
    double window_l2 = 0.0;

    std::size_t x_count() const { return x_grid.size(); }
    std::size_t xi_count() const { return xi_grid.size(); }
    cplx at(std::size_t m, std::size_t k) const { return values[m * xi_count() + k]; }
};

struct MixedNormReport {
    double p = 2.0;
    double q = 2.0;
    double value = 0.0;
    int dim = 1;
    int points = 0;
    double half_width = 0.0;
};

// W_phi f(x, xi) = integral conj(phi(y - x)) exp(-i y.xi) f(y) dy, with the
// ranges of x and xi inherited from f's grid and its dual. Cost O(N^2 log N)
// per spatial dimension pair; slices parallelize over x.
PhaseSpaceField wpt(const Field& f, const Field& phi);

// Adjoint W*_phi[F](x) = double integral phi(x - y) exp(i x.xi) F(y, xi) dy dbar(xi)
// with quadrature weights h^n and (dxi)^n (2pi)^-n.
Field iwpt(const PhaseSpaceField& F, const Field& phi);

// (1 / ||phi||_L2^2) W*_phi[F]; with F = wpt(f, phi) this reconstructs f.
Field reconstruct(const PhaseSpaceField& F, const Field& phi);

// Mixed norm: discrete L^p over x (weight h^n) inside, L^q over xi
// (weight (dxi)^n (2pi)^-n) outside; p or q = infinity take exact node maxima.
MixedNormReport mod_norm(const PhaseSpaceField& F, double p, double q);

// Direct quadrature evaluation of W_phi f at one (possibly off-node) phase
// space point, with the window evaluated analytically. Independent of the
// transform path; exact for band-limited f up to quadrature roundoff.
cplx wpt_point(const Field& f, const WindowSpec& window, double x0, double xi0,
               double x1 = 0.0, double xi1 = 0.0);

// Weighted inner products used by the adjointness relation
// <wpt(f), G>_phase = <f, iwpt(G)>_space.
cplx inner_space(const Field& a, const Field& b);
cplx inner_phase(const PhaseSpaceField& A, const PhaseSpaceField& B);

}  // namespace wplab
