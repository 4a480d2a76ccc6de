#pragma once

#include <vector>

#include "wplab/grid.hpp"

namespace wplab {

enum class WindowKind { gaussian, hermite1, custom };

// Basic wave packet description. The analytic kinds are evaluated exactly at
// the nodes; `lambda` applies the L2-isometric dilation
// phi_lambda(x) = lambda^(n/2) phi(lambda x).
struct WindowSpec {
    WindowKind kind = WindowKind::gaussian;
    double width = 1.0;    // sigma > 0
    double lambda = 1.0;   // dilation dial, >= 1 in practice
    std::vector<cplx> custom_samples;  // custom kind only
    double l2_norm = 0.0;  // cached by make_window (grid quadrature)
};

// Analytic value of the time-0 window at a point (gaussian / hermite1 only).
cplx window_value(const WindowSpec& spec, double x0, double x1 = 0.0);

// Samples the window on the grid at time 0 and caches its discrete L2 norm in
// spec.l2_norm. Rejects all-zero custom samples.
Field make_window(WindowSpec& spec, const UniformGrid& grid);

// Exact free evolution exp(i t Lap / 2) via the spectral multiplier
// exp(-i t |xi|^2 / 2); preserves the discrete L2 norm.
Field evolve_window(const Field& phi0, double t);

// y |-> y_k y_l phi(t, y) on the grid (axes are 0-based).
Field moment_window(const Field& phi, int k, int l);

}  // namespace wplab
