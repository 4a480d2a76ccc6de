#include "wplab/propagator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spectral.hpp"

namespace wplab {

Scheme scheme_from_string(const std::string& s) {
    if (s == "strang-split" || s == "strang") return Scheme::strang_split;
    if (s == "lines-rk4" || s == "rk4") return Scheme::lines_rk4;
    throw std::invalid_argument("unknown scheme '" + s + "' (want strang-split or lines-rk4)");
}

std::string scheme_name(Scheme s) {
    return s == Scheme::strang_split ? "strang-split" : "lines-rk4";
}

const Field& EvolutionRun::at_time(double t, double tol) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= tol) return snapshots[i];
    throw std::invalid_argument("EvolutionRun: no snapshot at requested time");
}

Field free_propagate(const Field& u0, double t) {
    if (t == 0.0) return u0;
    Field spec = fourier_forward(u0);
    double k0, k1;
    for (std::size_t idx = 0; idx < spec.values.size(); ++idx) {
        spec.grid.freqs(idx, k0, k1);
        spec.values[idx] *= std::polar(1.0, -0.5 * t * (k0 * k0 + k1 * k1));
    }
    Field out = fourier_inverse(spec);
    out.time_tag = u0.time_tag + t;
    return out;
}

double rk4_policy_dt(const UniformGrid& g) {
    const double h = g.spacing();
    return 1.4 * h * h / (std::numbers::pi * g.dim());
}

double strang_policy_dt(const UniformGrid& g, const PotentialModel& m, double T) {
    const double amax = max_potential_amplitude(m, g, T);
    if (amax <= 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 * g.spacing() / amax;
}

namespace {

using detail::Radix2FFT;

// Shared buffers for one evolution run: spectral derivative machinery plus
// the per-node potential samples refreshed at each stage time.
class SpectralOperator {
  public:
    SpectralOperator(const UniformGrid& g, const PotentialModel& m)
        : grid_(g), model_(m), fft_(g.points()), size_(g.size()) {
        x0_.resize(size_);
        x1_.resize(size_);
        k2_.resize(size_);
        kx0_.resize(size_);
        kx1_.resize(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            grid_.coords(i, x0_[i], x1_[i]);
            double f0, f1;
            grid_.freqs(i, f0, f1);
            k2_[i] = f0 * f0 + f1 * f1;
            kx0_[i] = f0;
            kx1_[i] = f1;
        }
        spec_.resize(size_);
        d0_.resize(size_);
        d1_.resize(size_);
        a0_.resize(size_);
        a1_.resize(size_);
        diva_.resize(size_);
        a2_.resize(size_);
    }

    const UniformGrid& grid() const { return grid_; }
    std::size_t size() const { return size_; }

    void refresh_potential(double t) {
        for (std::size_t i = 0; i < size_; ++i) {
            const Vec2 x{x0_[i], x1_[i]};
            const Vec2 a = eval_potential(model_, t, x, MultiIndex{0, 0});
            a0_[i] = a[0];
            a1_[i] = a[1];
            diva_[i] = divergence(model_, t, x);
            a2_[i] = a[0] * a[0] + a[1] * a[1];
        }
    }

    // L(t) u = i [ (1/2) Lap u - (1/2) a^2 u - i ((1/2)(div a) + a . grad) u ].
    void apply_full(double t, const std::vector<cplx>& u, std::vector<cplx>& out) {
        refresh_potential(t);
        spectral_derivatives(u, /*with_laplacian=*/true);
        const cplx ihalf(0.0, 0.5);
        for (std::size_t i = 0; i < size_; ++i) {
            cplx adv = a0_[i] * d0_[i];
            if (grid_.dim() == 2) adv += a1_[i] * d1_[i];
            out[i] = ihalf * (lap_[i] - a2_[i] * u[i]) + 0.5 * diva_[i] * u[i] + adv;
        }
    }

    // B(t) u = i [ -(1/2) a^2 u - i ((1/2)(div a) + a . grad) u ].
    void apply_advective(double t, const std::vector<cplx>& u, std::vector<cplx>& out) {
        refresh_potential(t);
        spectral_derivatives(u, /*with_laplacian=*/false);
        const cplx ihalf(0.0, 0.5);
        for (std::size_t i = 0; i < size_; ++i) {
            cplx adv = a0_[i] * d0_[i];
            if (grid_.dim() == 2) adv += a1_[i] * d1_[i];
            out[i] = -ihalf * a2_[i] * u[i] + 0.5 * diva_[i] * u[i] + adv;
        }
    }

    // Exact kinetic factor exp(i tau Lap / 2).
    void kinetic(std::vector<cplx>& u, double tau) {
        spec_ = u;
        detail::forward_in_place(grid_, spec_.data(), fft_, scratch_);
        for (std::size_t i = 0; i < size_; ++i) spec_[i] *= std::polar(1.0, -0.5 * tau * k2_[i]);
        detail::inverse_in_place(grid_, spec_.data(), fft_, scratch_);
        u = spec_;
    }

  private:
    void spectral_derivatives(const std::vector<cplx>& u, bool with_laplacian) {
        spec_ = u;
        detail::forward_in_place(grid_, spec_.data(), fft_, scratch_);
        if (with_laplacian) {
            lap_.resize(size_);
            for (std::size_t i = 0; i < size_; ++i) lap_[i] = -k2_[i] * spec_[i];
            detail::inverse_in_place(grid_, lap_.data(), fft_, scratch_);
        }
        const cplx iu(0.0, 1.0);
        for (std::size_t i = 0; i < size_; ++i) d0_[i] = iu * kx0_[i] * spec_[i];
        detail::inverse_in_place(grid_, d0_.data(), fft_, scratch_);
        if (grid_.dim() == 2) {
            for (std::size_t i = 0; i < size_; ++i) d1_[i] = iu * kx1_[i] * spec_[i];
            detail::inverse_in_place(grid_, d1_.data(), fft_, scratch_);
        }
    }

    UniformGrid grid_;
    PotentialModel model_;
    Radix2FFT fft_;
    std::size_t size_;
    std::vector<double> x0_, x1_, k2_, kx0_, kx1_;
    std::vector<double> a0_, a1_, diva_, a2_;
    std::vector<cplx> spec_, lap_, d0_, d1_;
    std::vector<cplx> scratch_;
};

class Stepper {
  public:
    Stepper(const UniformGrid& g, const PotentialModel& m, Scheme scheme)
        : op_(g, m), scheme_(scheme) {
        const std::size_t n = g.size();
        k1_.resize(n);
        k2_.resize(n);
        k3_.resize(n);
        k4_.resize(n);
        tmp_.resize(n);
    }

    void step(std::vector<cplx>& u, double t, double dt) {
        if (scheme_ == Scheme::lines_rk4) {
            rk4(u, t, dt, /*advective_only=*/false);
        } else {
            op_.kinetic(u, 0.5 * dt);
            const double sub = dt / 4.0;
            for (int i = 0; i < 4; ++i) rk4(u, t + i * sub, sub, /*advective_only=*/true);
            op_.kinetic(u, 0.5 * dt);
        }
    }

  private:
    void rk4(std::vector<cplx>& u, double t, double dt, bool advective_only) {
        auto f = [&](double s, const std::vector<cplx>& v, std::vector<cplx>& out) {
            if (advective_only)
                op_.apply_advective(s, v, out);
            else
                op_.apply_full(s, v, out);
        };
        const std::size_t n = u.size();
        f(t, u, k1_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + 0.5 * dt * k1_[i];
        f(t + 0.5 * dt, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + 0.5 * dt * k2_[i];
        f(t + 0.5 * dt, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + dt * k3_[i];
        f(t + dt, tmp_, k4_);
        for (std::size_t i = 0; i < n; ++i)
            u[i] += dt / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

    SpectralOperator op_;
    Scheme scheme_;
    std::vector<cplx> k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace

EvolutionRun magnetic_propagate_between(const Field& u0, double t0, const PotentialModel& m,
                                        double t1, double dt, Scheme scheme,
                                        std::span<const double> snapshot_times) {
    if (u0.grid.dim() != m.dim)
        throw std::invalid_argument("magnetic_propagate: grid and potential dimensions differ");
    if (!(dt > 0.0)) throw std::invalid_argument("magnetic_propagate: dt must be positive");

    const double horizon = std::abs(t1 - t0);
    if (scheme == Scheme::lines_rk4) {
        const double cap = rk4_policy_dt(u0.grid);
        if (dt > cap * (1.0 + 1e-12))
            throw std::invalid_argument("magnetic_propagate: dt violates the lines-rk4 stability "
                                        "policy dt <= 1.4 h^2 / (pi n) = " + std::to_string(cap));
    } else {
        const double cap = strang_policy_dt(u0.grid, m, horizon);
        if (dt > cap * (1.0 + 1e-12))
            throw std::invalid_argument("magnetic_propagate: dt violates the strang-split "
                                        "stability policy dt <= 0.5 h / max|a| = " +
                                        std::to_string(cap));
    }

    std::vector<double> outputs(snapshot_times.begin(), snapshot_times.end());
    if (outputs.empty()) outputs.push_back(t1);
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    double prev = t0;
    for (const double s : outputs) {
        if (dir * (s - prev) <= 0.0 || dir * (s - t1) > 1e-12)
            throw std::invalid_argument("magnetic_propagate: snapshot times must advance "
                                        "strictly from t0 toward t1");
        prev = s;
    }

    EvolutionRun run;
    run.model = m;
    run.grid = u0.grid;
    run.initial = u0;
    run.dt = dt;
    run.scheme = scheme;

    const double norm0 = l2_norm(u0);
    Stepper stepper(u0.grid, m, scheme);
    std::vector<cplx> u = u0.values;
    double t = t0;
    for (const double target : outputs) {
        const double span = target - t;
        const auto steps = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(std::abs(span) / dt - 1e-9)));
        const double sub = span / static_cast<double>(steps);
        for (std::size_t k = 0; k < steps; ++k) {
            stepper.step(u, t, sub);
            t += sub;
        }
        t = target;  // guard against accumulated roundoff in t
        assert_finite(u, "magnetic_propagate");
        Field snap{u0.grid, u, t};
        run.times.push_back(t);
        run.l2_drift.push_back(norm0 > 0.0 ? std::abs(l2_norm(snap) - norm0) / norm0 : 0.0);
        run.snapshots.push_back(std::move(snap));
    }
    return run;
}

EvolutionRun magnetic_propagate(const Field& u0, const PotentialModel& m, double T, double dt,
                                Scheme scheme, std::span<const double> snapshot_times) {
    return magnetic_propagate_between(u0, 0.0, m, T, dt, scheme, snapshot_times);
}

}  // namespace wplab
