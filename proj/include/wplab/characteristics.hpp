#pragma once

#include <vector>

#include "wplab/potentials.hpp"

namespace wplab {

// Discrete solution of the characteristic system
//   x'(s) = grad_xi H(s, x, xi),  xi'(s) = -grad_x H(s, x, xi)
// anchored at x(t) = x, xi(t) = xi, together with the accumulated complex
// action phase Phi(s_k) = integral_t^{s_k} h(tau, x(tau), xi(tau)) d tau.
struct Trajectory {
    int dim = 1;
    double anchor_time = 0.0;
    Vec2 anchor_x{0.0, 0.0};
    Vec2 anchor_xi{0.0, 0.0};
    double step = 0.0;  // signed
    std::vector<double> times;
    std::vector<Vec2> x;
    std::vector<Vec2> xi;
    std::vector<cplx> phase;

    std::size_t steps() const { return times.empty() ? 0 : times.size() - 1; }
    Vec2 end_x() const { return x.back(); }
    Vec2 end_xi() const { return xi.back(); }
    cplx end_phase() const { return phase.back(); }
};

// Classical fixed-step 4th-order integration from the anchor time t to
// s_target (forward or backward); the phase is accumulated along the stored
// states by composite Simpson quadrature, independent of the flow stepping.
Trajectory solve_flow(const PotentialModel& m, double t, Vec2 x, Vec2 xi, double s_target,
                      double dt);

// Central-difference determinant of the 2n x 2n Jacobian of the flow map
// (x, xi) |-> (x(s), xi(s)); equals 1 for Hamiltonian flows.
double flow_jacobian_det(const PotentialModel& m, double t, Vec2 x, Vec2 xi, double s,
                         double eps, double dt = 1e-3);

// integral_0^T <x(tau)>^(-1-delta) |xi(tau)| d tau along the trajectory
// anchored at (t, x, xi); requires 0 <= t <= T.
double yajima_integral(const PotentialModel& m, double delta, double T, double t, Vec2 x,
                       Vec2 xi, double dt);

}  // namespace wplab
