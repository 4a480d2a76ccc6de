#include "wplab/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace wplab {

namespace {

double bracket(double x0, double x1) { return std::sqrt(1.0 + x0 * x0 + x1 * x1); }  // <x>

// d^alpha of g(x) = <x>^rho, |alpha| <= 2.
double bracket_pow_deriv(double rho, Vec2 x, MultiIndex alpha) {
    const double br = bracket(x[0], x[1]);
    switch (order(alpha)) {
        case 0:
            return std::pow(br, rho);
        case 1: {
            const int k = alpha[0] == 1 ? 0 : 1;
            return rho * x[k] * std::pow(br, rho - 2.0);
        }
        case 2: {
            int k, l;
            if (alpha[0] == 2) { k = 0; l = 0; }
            else if (alpha[1] == 2) { k = 1; l = 1; }
            else { k = 0; l = 1; }
            const double kron = (k == l) ? 1.0 : 0.0;
            return rho * kron * std::pow(br, rho - 2.0) +
                   rho * (rho - 2.0) * x[k] * x[l] * std::pow(br, rho - 4.0);
        }
        default:
            throw std::invalid_argument("bracket_pow_deriv: |alpha| must be <= 2");
    }
}

void validate_alpha(const PotentialModel& m, MultiIndex alpha) {
    if (alpha[0] < 0 || alpha[1] < 0 || order(alpha) > 2)
        throw std::invalid_argument("eval_potential: unsupported multi-index order");
    if (m.dim == 1 && alpha[1] != 0)
        throw std::invalid_argument("eval_potential: second axis used on a 1-d model");
}

}  // namespace

PotentialModel PotentialModel::zero(int dim) {
    PotentialModel m;
    m.kind = PotentialKind::zero;
    m.dim = dim;
    return m;
}

PotentialModel PotentialModel::make_constant(int dim, Vec2 c) {
    PotentialModel m;
    m.kind = PotentialKind::constant;
    m.dim = dim;
    m.constant = c;
    return m;
}

PotentialModel PotentialModel::make_linear(int dim, const std::array<Vec2, 2>& A,
                                           double declared_rho) {
    PotentialModel m;
    m.kind = PotentialKind::linear;
    m.dim = dim;
    m.matrix = A;
    m.rho = declared_rho;
    if (dim == 2 && A[0][1] != A[1][0])
        throw std::invalid_argument("PotentialModel: linear coefficient matrix must be symmetric");
    return m;
}

PotentialModel PotentialModel::make_sublinear(int dim, double rho, Vec2 v, double c0,
                                              double eps, double omega) {
    if (!(rho < 1.0)) throw std::invalid_argument("PotentialModel: sublinear kind needs rho < 1");
    PotentialModel m;
    m.kind = PotentialKind::sublinear;
    m.dim = dim;
    m.rho = rho;
    m.direction = v;
    m.c0 = c0;
    m.eps = eps;
    m.omega = omega;
    return m;
}

double PotentialModel::amplitude(double t) const {
    if (kind != PotentialKind::sublinear) return 1.0;
    return c0 * (1.0 + eps * std::sin(omega * t));
}

double PotentialModel::max_amplitude_factor() const {
    if (kind != PotentialKind::sublinear) return 1.0;
    return c0 * (1.0 + std::abs(eps));
}

std::string PotentialModel::describe() const {
    switch (kind) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::constant: return "constant";
        case PotentialKind::linear: return "linear";
        case PotentialKind::sublinear: return "sublinear";
    }
    return "?";
}

Vec2 eval_potential(const PotentialModel& m, double t, Vec2 x, MultiIndex alpha) {
    validate_alpha(m, alpha);
    Vec2 out{0.0, 0.0};
    switch (m.kind) {
        case PotentialKind::zero:
            break;
        case PotentialKind::constant:
            if (order(alpha) == 0) out = m.constant;
            break;
        case PotentialKind::linear:
            if (order(alpha) == 0) {
                for (int j = 0; j < m.dim; ++j)
                    out[j] = m.matrix[j][0] * x[0] + m.matrix[j][1] * x[1];
            } else if (order(alpha) == 1) {
                const int k = alpha[0] == 1 ? 0 : 1;
                for (int j = 0; j < m.dim; ++j) out[j] = m.matrix[j][k];
            }
            break;
        case PotentialKind::sublinear: {
            const double g = bracket_pow_deriv(m.rho, x, alpha);
            const double s = m.amplitude(t);
            for (int j = 0; j < m.dim; ++j) out[j] = s * m.direction[j] * g;
            break;
        }
    }
    return out;
}

double divergence(const PotentialModel& m, double t, Vec2 x) {
    double div = eval_potential(m, t, x, MultiIndex{1, 0})[0];
    if (m.dim == 2) div += eval_potential(m, t, x, MultiIndex{0, 1})[1];
    return div;
}

double hess_a_squared(const PotentialModel& m, double t, Vec2 x, int k, int l) {
    // d^2_{kl}(a_j^2) = 2 (d_k a_j)(d_l a_j) + 2 a_j d^2_{kl} a_j, summed over j.
    MultiIndex ek{0, 0}, el{0, 0}, ekl{0, 0};
    ek[k] = 1;
    el[l] = 1;
    ekl[k] += 1;
    ekl[l] += 1;
    const Vec2 a = eval_potential(m, t, x, MultiIndex{0, 0});
    const Vec2 dk = eval_potential(m, t, x, ek);
    const Vec2 dl = eval_potential(m, t, x, el);
    const Vec2 dkl = eval_potential(m, t, x, ekl);
    double out = 0.0;
    for (int j = 0; j < m.dim; ++j) out += 2.0 * (dk[j] * dl[j] + a[j] * dkl[j]);
    return out;
}

double hamiltonian(const PotentialModel& m, double t, Vec2 x, Vec2 xi) {
    const Vec2 a = eval_potential(m, t, x, MultiIndex{0, 0});
    double s = 0.0;
    for (int j = 0; j < m.dim; ++j) {
        const double d = xi[j] - a[j];
        s += d * d;
    }
    return 0.5 * s;
}

HamiltonianGradient grad_hamiltonian(const PotentialModel& m, double t, Vec2 x, Vec2 xi) {
    const Vec2 a = eval_potential(m, t, x, MultiIndex{0, 0});
    HamiltonianGradient g;
    Vec2 p{0.0, 0.0};  // xi - a
    for (int j = 0; j < m.dim; ++j) p[j] = xi[j] - a[j];
    g.dxi = p;
    for (int k = 0; k < m.dim; ++k) {
        MultiIndex ek{0, 0};
        ek[k] = 1;
        const Vec2 dka = eval_potential(m, t, x, ek);
        double acc = 0.0;
        for (int j = 0; j < m.dim; ++j) acc -= dka[j] * p[j];
        g.dx[k] = acc;
    }
    return g;
}

cplx h_symbol(const PotentialModel& m, double t, Vec2 x, Vec2 xi) {
    const double H = hamiltonian(m, t, x, xi);
    const HamiltonianGradient g = grad_hamiltonian(m, t, x, xi);
    double re = -H;
    for (int k = 0; k < m.dim; ++k) re += g.dx[k] * x[k];
    const double im = 0.5 * divergence(m, t, x);
    return {re, im};
}

namespace {

std::vector<MultiIndex> alphas_up_to_two(int dim) {
    if (dim == 1) return {{0, 0}, {1, 0}, {2, 0}};
    return {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
}

double assumption_sup(const PotentialModel& m, MultiIndex alpha, double T, double X, int nx,
                      int nt) {
    double sup = 0.0;
    for (int it = 0; it < nt; ++it) {
        const double t = nt == 1 ? 0.0 : T * it / (nt - 1);
        for (int i0 = 0; i0 < nx; ++i0) {
            const double x0 = -X + 2.0 * X * i0 / (nx - 1);
            const int n1 = m.dim == 2 ? nx : 1;
            for (int i1 = 0; i1 < n1; ++i1) {
                const double x1 = m.dim == 2 ? -X + 2.0 * X * i1 / (nx - 1) : 0.0;
                const Vec2 a = eval_potential(m, t, Vec2{x0, x1}, alpha);
                double comp = 0.0;
                for (int j = 0; j < m.dim; ++j) comp = std::max(comp, std::abs(a[j]));
                const double weight = std::pow(bracket(x0, x1), m.rho - order(alpha));
                sup = std::max(sup, comp / weight);
            }
        }
    }
    return sup;
}

}  // namespace

AssumptionReport check_assumption(const PotentialModel& m, double T, double X_max, int samples) {
    if (!(T > 0.0) || !(X_max > 0.0) || samples < 3)
        throw std::invalid_argument("check_assumption: box and sample count must be positive");
    const int nt = std::max(3, samples / 4);
    AssumptionReport rep;
    rep.pass = true;
    for (const MultiIndex& alpha : alphas_up_to_two(m.dim)) {
        AssumptionReport::Entry e;
        e.alpha = alpha;
        e.sup_base = assumption_sup(m, alpha, T, X_max, samples, nt);
        e.sup_doubled = assumption_sup(m, alpha, T, 2.0 * X_max, 2 * samples - 1, nt);
        const double base = std::max(e.sup_base, 1e-300);
        e.rel_change = std::abs(e.sup_doubled - e.sup_base) / base;
        if (e.sup_base < 1e-300 && e.sup_doubled < 1e-300) e.rel_change = 0.0;
        e.stable = std::isfinite(e.sup_doubled) && e.rel_change < 0.05;
        if (!e.stable) {
            rep.pass = false;
            if (rep.detail.empty())
                rep.detail = "ratio for |alpha| = " + std::to_string(order(alpha)) +
                             " grows under box doubling";
        }
        rep.entries.push_back(e);
    }
    return rep;
}

double max_potential_amplitude(const PotentialModel& m, const UniformGrid& g, double T) {
    double sup = 0.0;
    const int nt = 9;
    for (int it = 0; it < nt; ++it) {
        const double t = T * it / (nt - 1);
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            double x0, x1;
            g.coords(idx, x0, x1);
            const Vec2 a = eval_potential(m, t, Vec2{x0, x1}, MultiIndex{0, 0});
            sup = std::max(sup, std::sqrt(a[0] * a[0] + a[1] * a[1]));
        }
        if (m.kind != PotentialKind::sublinear) break;  // only s(t) is time dependent
    }
    return sup;
}

}  // namespace wplab
