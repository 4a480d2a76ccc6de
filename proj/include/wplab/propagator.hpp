#pragma once

#include <span>
#include <string>
#include <vector>

#include "wplab/grid.hpp"
#include "wplab/potentials.hpp"

namespace wplab {

enum class Scheme { strang_split, lines_rk4 };

Scheme scheme_from_string(const std::string& s);
std::string scheme_name(Scheme s);

struct EvolutionRun {
    PotentialModel model;
    UniformGrid grid;
    Field initial;
    double dt = 0.0;
    Scheme scheme = Scheme::lines_rk4;
    std::vector<double> times;      // strictly increasing snapshot times
    std::vector<Field> snapshots;   // one per entry of `times`
    std::vector<double> l2_drift;   // |  ||u(t_k)|| - ||u0||  | / ||u0||

    const Field& at_time(double t, double tol = 1e-9) const;
};

// Exact discrete free evolution exp(i t Lap / 2) (unitary multiplier).
Field free_propagate(const Field& u0, double t);

// Largest stable step for explicit 4th-order stepping of the spectral
// operator: 1.4 h^2 / (pi n) (the Laplacian spectral radius scales with the
// dimension).
double rk4_policy_dt(const UniformGrid& g);
// Advection substep policy 0.5 h / max|a| for the splitting scheme
// (unbounded when a vanishes identically).
double strang_policy_dt(const UniformGrid& g, const PotentialModel& m, double T);

// March i du/dt = -(1/2)(grad - i a)^2 u from time t0 to t1 (either
// direction), storing snapshots at the requested times (default: endpoint
// only). `dt` is the largest step actually taken; intervals between snapshot
// times are subdivided uniformly so every snapshot time is hit exactly.
// Violating the scheme's stability policy is an error.
EvolutionRun magnetic_propagate_between(const Field& u0, double t0, const PotentialModel& m,
                                        double t1, double dt, Scheme scheme,
                                        std::span<const double> snapshot_times = {});

// Common case: start at t = 0, evolve to T > 0.
EvolutionRun magnetic_propagate(const Field& u0, const PotentialModel& m, double T, double dt,
                                Scheme scheme, std::span<const double> snapshot_times = {});

}  // namespace wplab
