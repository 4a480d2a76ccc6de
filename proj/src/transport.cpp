#include "wplab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wplab/characteristics.hpp"
#include "parallel.hpp"
#include "spectral.hpp"

namespace wplab {

namespace {

// 16-point Gauss-Legendre abscissae/weights on [-1, 1].
constexpr int kGL = 16;
constexpr double kGLNode[kGL] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGLWeight[kGL] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

struct ThetaIntegrals {
    double hess_a2 = 0.0;       // int d^2(a^2)(x + theta z) (1-theta) dtheta
    double d2a_flat = 0.0;      // int a''(x + theta z) w(theta) dtheta
    double da_flat = 0.0;       // int a'(x + theta z) w(theta) dtheta
    double d2a_linear = 0.0;    // int a''(x + theta z) (1-theta) dtheta
};

ThetaIntegrals theta_integrals(const PotentialModel& m, double t, double x, double z,
                               int panels, TaylorWeight weight) {
    ThetaIntegrals out;
    for (int p = 0; p < panels; ++p) {
        const double lo = static_cast<double>(p) / panels;
        const double half = 0.5 / panels;
        for (int q = 0; q < kGL; ++q) {
            const double theta = lo + half * (kGLNode[q] + 1.0);
            const double w = half * kGLWeight[q];
            const double wfirst = weight == TaylorWeight::uniform ? w : w * (1.0 - theta);
            const double wtail = w * (1.0 - theta);
            const Vec2 pt{x + theta * z, 0.0};
            const double da = eval_potential(m, t, pt, MultiIndex{1, 0})[0];
            const double d2a = eval_potential(m, t, pt, MultiIndex{2, 0})[0];
            out.hess_a2 += wtail * hess_a_squared(m, t, pt, 0, 0);
            out.d2a_flat += wfirst * d2a;
            out.da_flat += wfirst * da;
            out.d2a_linear += wtail * d2a;
        }
    }
    return out;
}

int node_index(const UniformGrid& g, double x, const char* op) {
    const double pos = (x + g.half_width()) / g.spacing();
    const int j = static_cast<int>(std::lround(pos));
    if (j < 0 || j >= g.points() || std::abs(pos - j) > 1e-8)
        throw std::invalid_argument(std::string(op) + ": x must be a spatial grid node");
    return j;
}

Field spectral_derivative(const Field& f) {
    Field spec = fourier_forward(f);
    double k0, k1;
    const cplx iu(0.0, 1.0);
    for (std::size_t idx = 0; idx < spec.values.size(); ++idx) {
        spec.grid.freqs(idx, k0, k1);
        spec.values[idx] *= iu * k0;
    }
    return fourier_inverse(spec);
}

}  // namespace

std::array<cplx, 3> remainder_all(const Field& u_t, const Field& phi_t, const PotentialModel& m,
                                  double t, double x, double xi, int theta_panels,
                                  TaylorWeight weight) {
    if (u_t.grid.dim() != 1 || m.dim != 1)
        throw std::invalid_argument("remainder_all: implemented for dimension 1 only");
    if (u_t.grid != phi_t.grid)
        throw std::invalid_argument("remainder_all: field and window grids differ");
    if (theta_panels < 1) throw std::invalid_argument("remainder_all: theta_panels must be >= 1");

    const UniformGrid& g = u_t.grid;
    const int n = g.points();
    const int j0 = node_index(g, x, "remainder_all");
    const Field dphi = spectral_derivative(phi_t);

    cplx r1(0.0), r2(0.0), r3(0.0);
    for (int j = 0; j < n; ++j) {
        const int wj = (j - j0 + n / 2 + n) % n;  // origin sits at node n/2
        const double z = g.coord(wj);             // wrapped displacement y - x in [-L, L)
        const double y = g.coord(j);
        const ThetaIntegrals th = theta_integrals(m, t, x, z, theta_panels, weight);
        const cplx phase = std::polar(1.0, -y * xi);
        const cplx common = u_t.values[j] * phase;
        const cplx phi_c = std::conj(phi_t.values[wj]);
        const cplx dphi_c = std::conj(dphi.values[wj]);

        r1 += phi_c * (th.hess_a2 * z * z) * common;
        const cplx r21(0.0, 0.5 * th.d2a_flat * z);
        const cplx r22(0.0, th.da_flat * z);
        r2 += (r21 * phi_c + r22 * dphi_c) * common;
        r3 += std::conj(z * z * phi_t.values[wj]) * xi * th.d2a_linear * common;
    }
    const double h = g.spacing();
    return {-0.5 * h * r1, h * r2, h * r3};
}

cplx remainder_apply(const Field& u_t, const Field& phi_t, const PotentialModel& m, double t,
                     RemainderKind which, double x, double xi, int theta_panels,
                     TaylorWeight weight) {
    const auto all = remainder_all(u_t, phi_t, m, t, x, xi, theta_panels, weight);
    switch (which) {
        case RemainderKind::r1: return all[0];
        case RemainderKind::r2: return all[1];
        case RemainderKind::r3: return all[2];
    }
    return {};
}

TransportField transport_leading(const Field& u0, const WindowSpec& window,
                                 const PotentialModel& m, double t, std::span<const double> xs,
                                 std::span<const double> xis, double flow_dt) {
    if (u0.grid.dim() != 1 || m.dim != 1)
        throw std::invalid_argument("transport_leading: implemented for dimension 1 only");

    TransportField out;
    out.xs.assign(xs.begin(), xs.end());
    out.xis.assign(xis.begin(), xis.end());
    out.values.resize(xs.size() * xis.size());
    out.in_range.assign(xs.size() * xis.size(), 1);

    const double x_cap = u0.grid.half_width() - 4.0 * u0.grid.spacing();
    const double xi_cap = u0.grid.max_freq() - 4.0 * u0.grid.freq_spacing();

    detail::parallel_for(xs.size(), [&](std::size_t i) {
        for (std::size_t k = 0; k < xis.size(); ++k) {
            const Trajectory tr =
                solve_flow(m, t, Vec2{xs[i], 0.0}, Vec2{xis[k], 0.0}, 0.0, flow_dt);
            const double x0 = tr.end_x()[0];
            const double xi0 = tr.end_xi()[0];
            const cplx phi_back = tr.end_phase();  // integral_t^0 h
            const std::size_t idx = i * xis.size() + k;
            if (std::abs(x0) > x_cap || std::abs(xi0) > xi_cap) out.in_range[idx] = 0;
            out.values[idx] =
                std::exp(cplx(0.0, -1.0) * phi_back) * wpt_point(u0, window, x0, xi0);
        }
    });
    return out;
}

void interior_indices(const PhaseSpaceField& W, double rel_threshold, int stride, int margin,
                      std::vector<int>& x_idx, std::vector<int>& xi_idx) {
    const std::size_t nx = W.x_count(), nxi = W.xi_count();
    std::vector<double> mx(nx, 0.0), mxi(nxi, 0.0);
    double wmax = 0.0;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t k = 0; k < nxi; ++k) {
            const double v = std::abs(W.at(i, k));
            mx[i] = std::max(mx[i], v);
            mxi[k] = std::max(mxi[k], v);
            wmax = std::max(wmax, v);
        }
    const double cut = rel_threshold * wmax;
    x_idx.clear();
    xi_idx.clear();
    for (std::size_t i = margin; i + margin < nx; i += stride)
        if (mx[i] >= cut) x_idx.push_back(static_cast<int>(i));
    for (std::size_t k = margin; k + margin < nxi; k += stride)
        if (mxi[k] >= cut) xi_idx.push_back(static_cast<int>(k));
}

std::vector<TransportSample> transport_residual(const EvolutionRun& run, WindowSpec window,
                                                const PotentialModel& m, double t,
                                                std::span<const int> x_idx,
                                                std::span<const int> xi_idx,
                                                TaylorWeight weight) {
    if (run.grid.dim() != 1 || m.dim != 1)
        throw std::invalid_argument("transport_residual: implemented for dimension 1 only");

    // Locate the bracketing snapshot triple {t - dt, t, t + dt}.
    int center = -1;
    for (std::size_t i = 0; i < run.times.size(); ++i)
        if (std::abs(run.times[i] - t) < 1e-10) center = static_cast<int>(i);
    if (center < 1 || center + 1 >= static_cast<int>(run.times.size()))
        throw std::invalid_argument("transport_residual: run lacks snapshots bracketing t");
    const double dtm = run.times[center] - run.times[center - 1];
    const double dtp = run.times[center + 1] - run.times[center];
    if (std::abs(dtm - dtp) > 1e-10 * std::max(dtm, dtp))
        throw std::invalid_argument("transport_residual: bracketing snapshots must be equispaced");
    const double delta_t = dtp;

    const UniformGrid& g = run.grid;
    Field phi0 = make_window(window, g);
    const Field phi_m = evolve_window(phi0, run.times[center - 1]);
    const Field phi_c = evolve_window(phi0, run.times[center]);
    const Field phi_p = evolve_window(phi0, run.times[center + 1]);
    const PhaseSpaceField Wm = wpt(run.snapshots[center - 1], phi_m);
    const PhaseSpaceField Wc = wpt(run.snapshots[center], phi_c);
    const PhaseSpaceField Wp = wpt(run.snapshots[center + 1], phi_p);

    const std::size_t nxi = Wc.xi_count();
    const double hx = g.spacing();
    const double hxi = g.freq_spacing();
    const int n = g.points();

    for (const int i : x_idx)
        if (i < 2 || i + 2 >= n)
            throw std::invalid_argument("transport_residual: x index too close to the edge");
    for (const int k : xi_idx)
        if (k < 2 || k + 2 >= n)
            throw std::invalid_argument("transport_residual: xi index too close to the edge");

    const Field& u_t = run.snapshots[center];
    std::vector<TransportSample> samples(x_idx.size() * xi_idx.size());

    detail::parallel_for(x_idx.size(), [&](std::size_t a) {
        const int i = x_idx[a];
        const double x = g.coord(i);
        for (std::size_t b = 0; b < xi_idx.size(); ++b) {
            const int k = xi_idx[b];
            const double xi = g.freq(k);

            const auto W = [&](const PhaseSpaceField& F, int ii, int kk) {
                return F.values[static_cast<std::size_t>(ii) * nxi + kk];
            };
            const cplx dWdt = (W(Wp, i, k) - W(Wm, i, k)) / (2.0 * delta_t);
            const cplx dWdx = (-W(Wc, i + 2, k) + 8.0 * W(Wc, i + 1, k) - 8.0 * W(Wc, i - 1, k) +
                               W(Wc, i - 2, k)) /
                              (12.0 * hx);
            const cplx dWdxi = (-W(Wc, i, k + 2) + 8.0 * W(Wc, i, k + 1) - 8.0 * W(Wc, i, k - 1) +
                                W(Wc, i, k - 2)) /
                               (12.0 * hxi);

            const HamiltonianGradient gr = grad_hamiltonian(m, t, Vec2{x, 0.0}, Vec2{xi, 0.0});
            const cplx h = h_symbol(m, t, Vec2{x, 0.0}, Vec2{xi, 0.0});
            const cplx iu(0.0, 1.0);
            const cplx lhs =
                iu * dWdt + iu * gr.dxi[0] * dWdx - iu * gr.dx[0] * dWdxi + h * W(Wc, i, k);

            const auto rem = remainder_all(u_t, phi_c, m, t, x, xi, 1, weight);
            const cplx rhs = -(rem[0] + rem[1] + rem[2]);

            TransportSample& s = samples[a * xi_idx.size() + b];
            s.x = x;
            s.xi = xi;
            s.t = t;
            s.lhs = lhs;
            s.rhs = rhs;
            s.r1 = rem[0];
            s.r2 = rem[1];
            s.r3 = rem[2];
            s.residual = std::abs(lhs - rhs);
            s.w_abs = std::abs(W(Wc, i, k));
        }
    });
    return samples;
}

ResidualSummary summarize_residuals(std::span<const TransportSample> samples) {
    auto median = [](std::vector<double> v) {
        if (v.empty()) return 0.0;
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    };
    std::vector<double> with, without;
    with.reserve(samples.size());
    without.reserve(samples.size());
    for (const auto& s : samples) {
        with.push_back(s.residual);
        without.push_back(std::abs(s.lhs));
    }
    ResidualSummary out;
    out.median_with = median(std::move(with));
    out.median_without = median(std::move(without));
    out.ratio = out.median_with > 0.0 ? out.median_without / out.median_with
                                      : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace wplab
