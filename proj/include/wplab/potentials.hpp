#pragma once

#include <array>
#include <string>
#include <vector>

#include "wplab/grid.hpp"

namespace wplab {

// Points / covectors padded to two components; component 1 is ignored when
// dim == 1. Keeps the flow integrator allocation-free.
using Vec2 = std::array<double, 2>;
using MultiIndex = std::array<int, 2>;

inline int order(const MultiIndex& a) { return a[0] + a[1]; }

enum class PotentialKind { zero, constant, linear, sublinear };

// Analytic vector potential a(t, x) with closed-form x-derivatives up to
// order 2. The sublinear kind is a(t,x) = s(t) v <x>^rho with
// s(t) = c0 (1 + eps sin(omega t)) and <x> = (1 + |x|^2)^(1/2); the linear
// kind a(t,x) = A x (A real symmetric) is a comparison / negative control and
// is excluded from the bounded-growth acceptance sweeps.
struct PotentialModel {
    PotentialKind kind = PotentialKind::zero;
    int dim = 1;
    double rho = 0.0;  // declared sub-linearity exponent (checked, not enforced)

    Vec2 constant{0.0, 0.0};                         // constant kind
    std::array<Vec2, 2> matrix{Vec2{0.0, 0.0}, Vec2{0.0, 0.0}};  // linear kind, row-major
    Vec2 direction{1.0, 0.0};                        // sublinear kind
    double c0 = 0.0, eps = 0.0, omega = 0.0;         // sublinear amplitude s(t)

    static PotentialModel zero(int dim);
    static PotentialModel make_constant(int dim, Vec2 c);
    static PotentialModel make_linear(int dim, const std::array<Vec2, 2>& A, double declared_rho);
    static PotentialModel make_sublinear(int dim, double rho, Vec2 v, double c0,
                                         double eps = 0.0, double omega = 0.0);

    double amplitude(double t) const;       // s(t); 1 for non-sublinear kinds
    double max_amplitude_factor() const;    // sup_t s(t)
    std::string describe() const;
};

// Componentwise partial derivative d^alpha_x a(t, x), |alpha| <= 2.
Vec2 eval_potential(const PotentialModel& m, double t, Vec2 x, MultiIndex alpha);

// div_x a(t, x).
double divergence(const PotentialModel& m, double t, Vec2 x);

// sum_j d^2_{x_k x_l} (a_j^2)(t, x), assembled from the closed forms.
double hess_a_squared(const PotentialModel& m, double t, Vec2 x, int k, int l);

// H(t,x,xi) = |xi - a(t,x)|^2 / 2 and its gradients
// (grad_xi H = xi - a, grad_x H = -(Da)^T (xi - a)).
double hamiltonian(const PotentialModel& m, double t, Vec2 x, Vec2 xi);
struct HamiltonianGradient {
    Vec2 dx{0.0, 0.0};
    Vec2 dxi{0.0, 0.0};
};
HamiltonianGradient grad_hamiltonian(const PotentialModel& m, double t, Vec2 x, Vec2 xi);

// h(t,x,xi) = -H + grad_x H . x + (i/2) div a.
cplx h_symbol(const PotentialModel& m, double t, Vec2 x, Vec2 xi);

// Sampled check of the sub-linear growth condition
// |d^alpha a_j| <= C_alpha <x>^(rho - |alpha|): per-alpha suprema of the
// normalized ratio over [0,T] x [-X,X]^n, compared against the same suprema
// over the doubled box [-2X,2X]^n. Pass needs every supremum finite and
// stable (relative change < 5%) under the doubling.
struct AssumptionReport {
    struct Entry {
        MultiIndex alpha;
        double sup_base = 0.0;
        double sup_doubled = 0.0;
        double rel_change = 0.0;
        bool stable = true;
    };
    std::vector<Entry> entries;
    bool pass = false;
    std::string detail;
};
AssumptionReport check_assumption(const PotentialModel& m, double T, double X_max, int samples);

// Supremum of |a(t,x)| over the grid box and t in [0,T]; feeds the advective
// stability policy.
double max_potential_amplitude(const PotentialModel& m, const UniformGrid& g, double T);

}  // namespace wplab
