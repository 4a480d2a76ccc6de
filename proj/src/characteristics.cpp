#include "wplab/characteristics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wplab {

namespace {

struct State {
    Vec2 x{0.0, 0.0};
    Vec2 xi{0.0, 0.0};
};

State rhs(const PotentialModel& m, double s, const State& u) {
    const HamiltonianGradient g = grad_hamiltonian(m, s, u.x, u.xi);
    State d;
    for (int j = 0; j < m.dim; ++j) {
        d.x[j] = g.dxi[j];
        d.xi[j] = -g.dx[j];
    }
    return d;
}

State axpy(const State& u, double c, const State& d, int dim) {
    State out = u;
    for (int j = 0; j < dim; ++j) {
        out.x[j] += c * d.x[j];
        out.xi[j] += c * d.xi[j];
    }
    return out;
}

State rk4_step(const PotentialModel& m, double s, const State& u, double h) {
    const State k1 = rhs(m, s, u);
    const State k2 = rhs(m, s + 0.5 * h, axpy(u, 0.5 * h, k1, m.dim));
    const State k3 = rhs(m, s + 0.5 * h, axpy(u, 0.5 * h, k2, m.dim));
    const State k4 = rhs(m, s + h, axpy(u, h, k3, m.dim));
    State out = u;
    for (int j = 0; j < m.dim; ++j) {
        out.x[j] += h / 6.0 * (k1.x[j] + 2.0 * k2.x[j] + 2.0 * k3.x[j] + k4.x[j]);
        out.xi[j] += h / 6.0 * (k1.xi[j] + 2.0 * k2.xi[j] + 2.0 * k3.xi[j] + k4.xi[j]);
    }
    return out;
}

bool finite(const State& u, int dim) {
    for (int j = 0; j < dim; ++j)
        if (!std::isfinite(u.x[j]) || !std::isfinite(u.xi[j])) return false;
    return true;
}

// Cumulative composite Simpson over uniformly spaced samples; odd tail
// intervals use the 3-point end rule so the result stays 4th order.
std::vector<cplx> cumulative_simpson(const std::vector<cplx>& f, double h) {
    const std::size_t n = f.size();
    std::vector<cplx> out(n, cplx(0.0));
    if (n < 2) return out;
    if (n == 2) {
        out[1] = 0.5 * h * (f[0] + f[1]);
        return out;
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) {
            out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
        } else if (i + 1 < n) {
            out[i] = out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
        } else {
            out[i] = out[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
        }
    }
    return out;
}

}  // namespace

Trajectory solve_flow(const PotentialModel& m, double t, Vec2 x, Vec2 xi, double s_target,
                      double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("solve_flow: dt must be positive");
    const double span = s_target - t;
    const double nsteps = std::abs(span) / dt;
    if (nsteps > 1e7) throw std::invalid_argument("solve_flow: step-count overflow");
    const std::size_t steps = span == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(nsteps - 1e-12));
    const double h = steps == 0 ? 0.0 : span / static_cast<double>(steps);

    Trajectory tr;
    tr.dim = m.dim;
    tr.anchor_time = t;
    tr.anchor_x = x;
    tr.anchor_xi = xi;
    tr.step = h;
    tr.times.reserve(steps + 1);
    tr.x.reserve(steps + 1);
    tr.xi.reserve(steps + 1);

    State u{x, xi};
    tr.times.push_back(t);
    tr.x.push_back(u.x);
    tr.xi.push_back(u.xi);
    for (std::size_t k = 0; k < steps; ++k) {
        const double s = t + h * static_cast<double>(k);
        u = rk4_step(m, s, u, h);
        if (!finite(u, m.dim))
            throw std::runtime_error("solve_flow: non-finite state at s = " +
                                     std::to_string(s + h));
        tr.times.push_back(t + h * static_cast<double>(k + 1));
        tr.x.push_back(u.x);
        tr.xi.push_back(u.xi);
    }

    std::vector<cplx> hv(tr.times.size());
    for (std::size_t k = 0; k < tr.times.size(); ++k)
        hv[k] = h_symbol(m, tr.times[k], tr.x[k], tr.xi[k]);
    tr.phase = cumulative_simpson(hv, h);
    return tr;
}

double flow_jacobian_det(const PotentialModel& m, double t, Vec2 x, Vec2 xi, double s,
                         double eps, double dt) {
    if (!(eps >= 1e-6 && eps <= 1e-3))
        throw std::invalid_argument("flow_jacobian_det: eps must lie in [1e-6, 1e-3]");
    const int n = m.dim;
    const int dim2 = 2 * n;
    double J[4][4] = {};

    auto endpoint = [&](const Vec2& x0, const Vec2& xi0, double* out) {
        const Trajectory tr = solve_flow(m, t, x0, xi0, s, dt);
        for (int j = 0; j < n; ++j) {
            out[j] = tr.end_x()[j];
            out[n + j] = tr.end_xi()[j];
        }
    };

    double plus[4], minus[4];
    for (int c = 0; c < dim2; ++c) {
        Vec2 xp = x, xip = xi, xm = x, xim = xi;
        if (c < n) {
            xp[c] += eps;
            xm[c] -= eps;
        } else {
            xip[c - n] += eps;
            xim[c - n] -= eps;
        }
        endpoint(xp, xip, plus);
        endpoint(xm, xim, minus);
        for (int r = 0; r < dim2; ++r) J[r][c] = (plus[r] - minus[r]) / (2.0 * eps);
    }

    if (dim2 == 2) return J[0][0] * J[1][1] - J[0][1] * J[1][0];

    // 4x4 determinant by partial-pivot elimination.
    double det = 1.0;
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(J[r][c]) > std::abs(J[piv][c])) piv = r;
        if (piv != c) {
            for (int k = 0; k < 4; ++k) std::swap(J[c][k], J[piv][k]);
            det = -det;
        }
        if (J[c][c] == 0.0) return 0.0;
        det *= J[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const double f = J[r][c] / J[c][c];
            for (int k = c; k < 4; ++k) J[r][k] -= f * J[c][k];
        }
    }
    return det;
}

namespace {

double yajima_segment(const PotentialModel& m, double delta, const Trajectory& tr) {
    std::vector<cplx> g(tr.times.size());
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        double x2 = 0.0, xi2 = 0.0;
        for (int j = 0; j < m.dim; ++j) {
            x2 += tr.x[k][j] * tr.x[k][j];
            xi2 += tr.xi[k][j] * tr.xi[k][j];
        }
        g[k] = std::pow(1.0 + x2, -0.5 * (1.0 + delta)) * std::sqrt(xi2);
    }
    const std::vector<cplx> cum = cumulative_simpson(g, tr.step);
    return cum.back().real();
}

}  // namespace

double yajima_integral(const PotentialModel& m, double delta, double T, double t, Vec2 x,
                       Vec2 xi, double dt) {
    if (!(delta > 0.0)) throw std::invalid_argument("yajima_integral: delta must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("yajima_integral: T must be positive");
    if (t < 0.0 || t > T)
        throw std::invalid_argument("yajima_integral: anchor time must lie in [0, T]");

    double value = 0.0;
    if (t > 0.0) {
        const Trajectory back = solve_flow(m, t, x, xi, 0.0, dt);
        value -= yajima_segment(m, delta, back);  // backward segment carries a negative step
    }
    if (t < T) {
        const Trajectory fwd = solve_flow(m, t, x, xi, T, dt);
        value += yajima_segment(m, delta, fwd);
    }
    return value;
}

}  // namespace wplab
