#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wplab/potentials.hpp"
#include "wplab/propagator.hpp"
#include "wplab/wavepacket.hpp"
#include "wplab/windows.hpp"

namespace wplab {

enum class RemainderKind { r1, r2, r3 };

// Quadrature weight of the theta integral in the two first-order remainder
// kernels. `one_minus_theta` transcribes the displayed kernels; `uniform` is
// the Taylor-consistent first-order remainder. The residual ablation test is
// the arbiter between them; `uniform` is the default because it is the
// variant that explains the transport defect (see tests/test_transport.cpp).
enum class TaylorWeight { uniform, one_minus_theta };

// Leading-order reconstruction of W_{phi(t)} u(t) on a phase-space lattice:
// flow each anchor back to time 0, evaluate W_{phi(0)} u0 at the endpoint by
// direct quadrature, and attach exp(-i Phi) with Phi the phase accumulated
// along the backward trajectory.
struct TransportField {
    std::vector<double> xs;
    std::vector<double> xis;
    std::vector<cplx> values;         // xs.size() * xis.size(), x slowest
    std::vector<std::uint8_t> in_range;  // 0 if the backward endpoint left the sampled box

    cplx at(std::size_t i, std::size_t k) const { return values[i * xis.size() + k]; }
    bool ok(std::size_t i, std::size_t k) const { return in_range[i * xis.size() + k] != 0; }
};

TransportField transport_leading(const Field& u0, const WindowSpec& window,
                                 const PotentialModel& m, double t, std::span<const double> xs,
                                 std::span<const double> xis, double flow_dt = 1e-3);

// One remainder operator evaluated at a single phase-space point (1-d only;
// x must be a grid node). The theta integral uses 16-point Gauss-Legendre per
// panel; `theta_panels` > 1 subdivides [0,1] for refinement checks.
cplx remainder_apply(const Field& u_t, const Field& phi_t, const PotentialModel& m, double t,
                     RemainderKind which, double x, double xi, int theta_panels = 1,
                     TaylorWeight weight = TaylorWeight::uniform);

// All three remainders in one sweep (shares the theta evaluations).
std::array<cplx, 3> remainder_all(const Field& u_t, const Field& phi_t, const PotentialModel& m,
                                  double t, double x, double xi, int theta_panels = 1,
                                  TaylorWeight weight = TaylorWeight::uniform);

struct TransportSample {
    double x = 0.0, xi = 0.0, t = 0.0;
    cplx lhs, rhs;   // rhs = -(R1 + R2 + R3) u
    cplx r1, r2, r3;
    double residual = 0.0;  // |lhs - rhs|
    double w_abs = 0.0;     // |W(t,x,xi)| at the point, for scale reference
};

// Pointwise residual of the first-order phase-space equation
//   (i d_t + i grad_xi H . grad_x - i grad_x H . grad_xi + h) W = -(R1+R2+R3)u
// with a central time difference over the run's snapshots bracketing t and
// 4th-order central stencils on the dense (x, xi) array. Lattice points are
// given as node indices (margin >= 2 from the array edges).
std::vector<TransportSample> transport_residual(const EvolutionRun& run, WindowSpec window,
                                                const PotentialModel& m, double t,
                                                std::span<const int> x_idx,
                                                std::span<const int> xi_idx,
                                                TaylorWeight weight = TaylorWeight::uniform);

// Index ranges (with stencil margin and stride) where the slice maxima of |W|
// stay above rel_threshold * max|W|.
void interior_indices(const PhaseSpaceField& W, double rel_threshold, int stride, int margin,
                      std::vector<int>& x_idx, std::vector<int>& xi_idx);

// Median of |lhs - rhs| and of |lhs| (the latter is the residual with the
// remainder side ablated to zero).
struct ResidualSummary {
    double median_with = 0.0;
    double median_without = 0.0;
    double ratio = 0.0;  // median_without / median_with
};
ResidualSummary summarize_residuals(std::span<const TransportSample> samples);

}  // namespace wplab
