#pragma once
/**
 * @file solvers.hpp
 * @brief Pseudo-spectral time-domain solvers on a 1D periodic grid.
 *
 * Every linear term is diagonal in Fourier space, so each solver advances
 * the n/2 + 1 half-spectrum coefficients independently and only returns
 * to physical space for snapshots (and, for Burgers, the nonlinear term).
 *
 * Fractional time derivatives use Grunwald-Letnikov convolutions applied
 * to the deviation from the initial Taylor polynomial (u - u0, or
 * u - u0 - t v0 for orders above one). That deviation has a quiescent past,
 * and the construction reproduces the Caputo initial-value problem whose
 * solutions are Mittag-Leffler functions.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracwave/core.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/field.hpp"
#include "fracwave/fracops.hpp"

namespace fracwave {

class SolverConfig {
  public:
    SolverConfig(double dt, std::size_t steps, std::size_t snapshot_every = 1)
        : dt_(dt), steps_(steps), every_(snapshot_every) {
        if (!(dt > 0.0) || !std::isfinite(dt)) {
            throw ConfigError("dt must be positive");
        }
        if (steps < 1) {
            throw ConfigError("steps must be at least 1");
        }
        if (snapshot_every < 1 || snapshot_every > steps) {
            throw ConfigError("snapshot_every must lie in [1, steps]");
        }
    }

    double dt() const noexcept { return dt_; }
    std::size_t steps() const noexcept { return steps_; }
    std::size_t snapshot_every() const noexcept { return every_; }
    double final_time() const noexcept { return dt_ * static_cast<double>(steps_); }

  private:
    double dt_;
    std::size_t steps_;
    std::size_t every_;
};

/**
 * Time-harmonic source f(x, t) = amplitude * ramp(t) * sin(omega t) * g(x),
 * with g a periodic Gaussian of the given width centred at x, and ramp a
 * raised cosine over `ramp_cycles` periods.
 */
struct MonochromaticSource {
    double omega;
    double x;
    double width;
    double amplitude = 1.0;
    double ramp_cycles = 3.0;

    double envelope(double t) const noexcept {
        const double ramp_time = ramp_cycles * 2.0 * pi / omega;
        if (ramp_cycles <= 0.0 || t >= ramp_time) {
            return 1.0;
        }
        if (t <= 0.0) {
            return 0.0;
        }
        return 0.5 * (1.0 - std::cos(pi * t / ramp_time));
    }

    double time_signal(double t) const noexcept {
        return amplitude * envelope(t) * std::sin(omega * t);
    }

    Field profile(const Grid1D& grid) const {
        const double L = grid.length();
        return Field::sample(grid, [&](double xi) {
            double d = std::fmod(xi - x, L);
            if (d > L / 2) {
                d -= L;
            } else if (d < -L / 2) {
                d += L;
            }
            return std::exp(-0.5 * d * d / (width * width));
        });
    }
};

namespace detail {

using cplx = std::complex<double>;

/**
 * Ring buffer of half-spectrum states, newest last. Stores interleaved
 * (re, im) doubles so the history convolution vectorizes.
 */
class ModeHistory {
  public:
    ModeHistory(std::size_t modes, std::size_t capacity)
        : modes_(modes), cap_(std::max<std::size_t>(capacity, 1)), buf_(2 * modes * cap_) {}

    void push(std::span<const cplx> state) {
        head_ = (head_ + 1) % cap_;
        double* dst = buf_.data() + 2 * modes_ * head_;
        for (std::size_t j = 0; j < modes_; ++j) {
            dst[2 * j] = state[j].real();
            dst[2 * j + 1] = state[j].imag();
        }
        count_ = std::min(count_ + 1, cap_);
    }

    std::size_t count() const noexcept { return count_; }

    /// Entry `ago` steps before the newest (0 = newest).
    const double* ago(std::size_t ago) const noexcept {
        const std::size_t idx = (head_ + cap_ - (ago % cap_)) % cap_;
        return buf_.data() + 2 * modes_ * idx;
    }

    /**
     * acc_j = sum_{i=1}^{terms} w_i * entry(i - 1 steps ago), i.e. the
     * history part of a GL convolution whose w_0 term is the unknown.
     */
    void convolve(const GlWeights& w, std::size_t terms, std::span<cplx> acc) const {
        std::vector<double> sum(2 * modes_, 0.0);
        for (std::size_t i = 1; i <= terms; ++i) {
            const double wi = w[i];
            const double* src = ago(i - 1);
            for (std::size_t q = 0; q < 2 * modes_; ++q) {
                sum[q] += wi * src[q];
            }
        }
        for (std::size_t j = 0; j < modes_; ++j) {
            acc[j] = {sum[2 * j], sum[2 * j + 1]};
        }
    }

  private:
    std::size_t modes_;
    std::size_t cap_;
    std::vector<double> buf_;
    std::size_t head_ = 0;
    std::size_t count_ = 0;
};

/// Number of history terms (i >= 1) a GL convolution needs at this point.
inline std::size_t history_terms(const GlWeights& w, const ModeHistory& h) {
    const std::size_t usable = w.active_size() > 0 ? w.active_size() - 1 : 0;
    return std::min(usable, h.count());
}

inline void require_finite_modes(std::span<const cplx> modes, std::size_t step,
                                 const char* what) {
    for (const cplx& c : modes) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InstabilityError(std::string(what) + " produced non-finite values", step);
        }
    }
}

inline void require_same_grid(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid())) {
        throw ShapeError("initial fields must share one grid");
    }
}

inline Field to_field(RealFft& fft, const Grid1D& grid, std::span<const cplx> modes,
                      std::size_t step, const char* what) {
    std::vector<double> v = fft.inverse(modes);
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw InstabilityError(std::string(what) + " produced non-finite values", step);
        }
    }
    return Field(grid, std::move(v));
}

} // namespace detail

/**
 * Fractional diffusion-wave equation d^beta u/dt^beta = -kappa (-Lap)^{lambda/2} u.
 *
 * Per mode, with K = kappa |k|^lambda and d = u - P(t) (P the initial
 * Taylor polynomial):
 *
 *   dt^{-beta} sum_j w_j d^{n-j} = -K (P(t_n) + d^n),
 *
 * solved implicitly for d^n. First-order accurate in time.
 */
inline Trajectory solve_fdwe(const Field& u0, const std::optional<Field>& v0,
                             const FdweParams& params, const SolverConfig& cfg) {
    const double beta = params.beta();
    if (beta > 1.0 && !v0) {
        throw MissingInitialConditionError("beta > 1 requires an initial velocity field v0");
    }
    if (beta <= 1.0 && v0) {
        throw ConfigError("v0 is only meaningful for beta > 1");
    }
    if (v0) {
        detail::require_same_grid(u0, *v0);
    }
    const Grid1D& grid = u0.grid();
    RealFft fft(grid.n());
    const std::size_t M = grid.half_modes();
    const auto U0 = fft.forward(u0.values());
    const std::vector<detail::cplx> V0 =
        v0 ? fft.forward(v0->values()) : std::vector<detail::cplx>(M);
    auto K = detail::half_spectrum_power(params.lambda(), grid);
    for (double& k : K) {
        k *= params.kappa();
    }

    const double dt = cfg.dt();
    const GlWeights w = gl_weights(beta, cfg.steps());
    const double scale = std::pow(dt, -beta);
    detail::ModeHistory hist(M, std::min(cfg.steps() + 1, w.active_size()));
    std::vector<detail::cplx> d(M), acc(M), u(M);
    hist.push(d); // d^0 = 0

    Trajectory traj(dt);
    traj.push(0.0, u0);
    for (std::size_t n = 1; n <= cfg.steps(); ++n) {
        const double t = static_cast<double>(n) * dt;
        hist.convolve(w, detail::history_terms(w, hist), acc);
        for (std::size_t j = 0; j < M; ++j) {
            const detail::cplx P = beta > 1.0 ? U0[j] + t * V0[j] : U0[j];
            d[j] = -(K[j] * P + scale * acc[j]) / (scale * w[0] + K[j]);
            u[j] = P + d[j];
        }
        detail::require_finite_modes(u, n, "solve_fdwe");
        hist.push(d);
        if (n % cfg.snapshot_every() == 0) {
            traj.push(t, detail::to_field(fft, grid, u, n, "solve_fdwe"));
        }
    }
    return traj;
}

/**
 * Time-space fractional lossy wave equation
 *
 *   (1/c0^2) p_tt + gamma d^eta/dt^eta (-Lap)^{s/2} p - Lap p = f.
 *
 * Leapfrog for p_tt and the Laplacian; the GL loss term is a weighted
 * blend theta * G^{n+1} + (1 - theta) * G^n with theta = eta/2, which
 * centres it on t_n (the GL sum is second-order accurate at
 * t_m - eta*dt/2). The G^{n+1} part is implicit. For eta = 1 this is the
 * classic centred damping (p^{n+1} - p^{n-1}) / (2 dt).
 *
 * Requires 0 < eta < 2 and dt <= 0.5 dx / c0.
 */
inline Trajectory solve_lossy_wave(const Field& p0, const Field& v0, const Medium& medium,
                                   const SolverConfig& cfg,
                                   const std::optional<MonochromaticSource>& source = std::nullopt) {
    const double eta = medium.eta();
    if (!(eta > 0.0 && eta < 2.0)) {
        throw UnsupportedRegimeError(
            "time-domain solver supports 0 < eta < 2 only; use the dispersion analysis for "
            "eta in (2, 3]");
    }
    detail::require_same_grid(p0, v0);
    const Grid1D& grid = p0.grid();
    const double c0 = medium.c0();
    const double dt = cfg.dt();
    const double cfl_limit = 0.5 * grid.dx() / c0;
    if (dt > cfl_limit * (1.0 + 1e-12)) {
        throw ConfigError("CFL violation: dt = " + std::to_string(dt) +
                          " exceeds 0.5*dx/c0 = " + std::to_string(cfl_limit));
    }

    RealFft fft(grid.n());
    const std::size_t M = grid.half_modes();
    const auto P0 = fft.forward(p0.values());
    const auto V0 = fft.forward(v0.values());
    const auto k2 = detail::half_spectrum_power(2.0, grid);
    const auto ks = detail::half_spectrum_power(medium.s(), grid);
    std::vector<detail::cplx> G_src;
    if (source) {
        G_src = fft.forward(source->profile(grid).values());
    }

    const GlWeights w = gl_weights(eta, cfg.steps() + 1);
    const double theta = eta / 2.0;
    const double A = 1.0 / (c0 * c0 * dt * dt);
    std::vector<double> B(M);
    for (std::size_t j = 0; j < M; ++j) {
        B[j] = medium.gamma() * ks[j] * std::pow(dt, -eta);
    }

    detail::ModeHistory hist(M, std::min(cfg.steps() + 2, w.active_size()));
    std::vector<detail::cplx> p_prev(M), p_cur(P0), p_next(M), q(M), H(M), G_cur(M);
    hist.push(q); // q^0 = 0, so G^0 = 0

    Trajectory traj(dt);
    traj.push(0.0, p0);
    for (std::size_t n = 0; n < cfg.steps(); ++n) {
        const double t = static_cast<double>(n) * dt;
        const double t_next = t + dt;
        const double f_t = source ? source->time_signal(t) : 0.0;
        hist.convolve(w, detail::history_terms(w, hist), H);
        for (std::size_t j = 0; j < M; ++j) {
            const detail::cplx P_next = eta > 1.0 ? P0[j] + t_next * V0[j] : P0[j];
            detail::cplx rhs = -k2[j] * p_cur[j] - B[j] * theta * (H[j] - w[0] * P_next) -
                               B[j] * (1.0 - theta) * G_cur[j];
            if (source) {
                rhs += f_t * G_src[j];
            }
            double lhs;
            if (n == 0) {
                // Ghost level p^{-1} = p^1 - 2 dt v0.
                rhs += 2.0 * A * (p_cur[j] + dt * V0[j]);
                lhs = 2.0 * A + B[j] * theta * w[0];
                if (eta == 1.0) {
                    // The centred damping at t = 0 is exactly gamma |k|^s v0.
                    rhs = -k2[j] * p_cur[j] - medium.gamma() * ks[j] * V0[j] +
                          2.0 * A * (p_cur[j] + dt * V0[j]) + (source ? f_t * G_src[j] : 0.0);
                    lhs = 2.0 * A;
                }
            } else {
                rhs += A * (2.0 * p_cur[j] - p_prev[j]);
                lhs = A + B[j] * theta * w[0];
            }
            p_next[j] = rhs / lhs;
            q[j] = p_next[j] - P_next;
            G_cur[j] = w[0] * q[j] + H[j];
        }
        detail::require_finite_modes(p_next, n + 1, "solve_lossy_wave");
        hist.push(q);
        std::swap(p_prev, p_cur);
        std::swap(p_cur, p_next);
        if ((n + 1) % cfg.snapshot_every() == 0) {
            traj.push(t_next, detail::to_field(fft, grid, p_cur, n + 1, "solve_lossy_wave"));
        }
    }
    return traj;
}

/// Damped wave (Telegrapher) equation: eta = 1, s = 0.
inline Trajectory solve_telegrapher(const Field& p0, const Field& v0, double c0, double gamma,
                                    const SolverConfig& cfg,
                                    const std::optional<MonochromaticSource>& source = std::nullopt) {
    return solve_lossy_wave(p0, v0, Medium("telegrapher", c0, gamma, 1.0, 0.0), cfg, source);
}

/// Thermoviscous wave equation: eta = 1, s = 2.
inline Trajectory solve_thermoviscous(const Field& p0, const Field& v0, double c0, double gamma,
                                      const SolverConfig& cfg,
                                      const std::optional<MonochromaticSource>& source =
                                          std::nullopt) {
    return solve_lossy_wave(p0, v0, Medium("thermoviscous", c0, gamma, 1.0, 2.0), cfg, source);
}

/**
 * Generalized fractional Burgers equation
 *
 *   d^beta u/dt^beta + u u_x = -kappa (-Lap)^{lambda/2} u,  0 < beta <= 1.
 *
 * The advective term is evaluated explicitly in conservative form (u^2/2)_x
 * with 2/3-rule dealiasing; the fractional Laplacian is implicit.
 */
inline Trajectory solve_fractional_burgers(const Field& u0, const FdweParams& params,
                                           const SolverConfig& cfg) {
    const double beta = params.beta();
    if (beta > 1.0) {
        throw UnsupportedRegimeError("fractional Burgers stepping supports 0 < beta <= 1");
    }
    if (!check_order_bound(params.lambda(), beta).satisfied) {
        throw DomainError("fractional Burgers requires -1 <= lambda - beta <= 1");
    }
    if (params.lambda() <= 0.0) {
        throw DomainError("fractional Burgers requires 0 < lambda <= 2");
    }
    const Grid1D& grid = u0.grid();
    RealFft fft(grid.n());
    const std::size_t M = grid.half_modes();
    const std::size_t n = grid.n();
    const auto U0 = fft.forward(u0.values());
    auto K = detail::half_spectrum_power(params.lambda(), grid);
    for (double& k : K) {
        k *= params.kappa();
    }
    // 2/3 rule: keep modes with 3 j < n.
    std::vector<double> keep(M);
    for (std::size_t j = 0; j < M; ++j) {
        keep[j] = (3 * j < n) ? 1.0 : 0.0;
    }

    const double dt = cfg.dt();
    const GlWeights w = gl_weights(beta, cfg.steps() + 1);
    const double scale = std::pow(dt, -beta);
    detail::ModeHistory hist(M, std::min(cfg.steps() + 2, w.active_size()));
    std::vector<detail::cplx> d(M), u(U0), acc(M), filtered(M), nonlinear(M);
    std::vector<double> phys(n);
    hist.push(d);

    const double blowup = 1e8 * (u0.max_abs() + 1.0);
    Trajectory traj(dt);
    traj.push(0.0, u0);
    for (std::size_t step = 0; step < cfg.steps(); ++step) {
        for (std::size_t j = 0; j < M; ++j) {
            filtered[j] = u[j] * keep[j];
        }
        fft.inverse(filtered, phys);
        for (double& v : phys) {
            v = 0.5 * v * v;
        }
        fft.forward(phys, nonlinear);
        for (std::size_t j = 0; j < M; ++j) {
            // Derivative of the Nyquist slot is taken as zero.
            const double kj = (j == n / 2) ? 0.0 : grid.abs_wavenumber(j);
            nonlinear[j] *= detail::cplx(0.0, kj) * keep[j];
        }
        hist.convolve(w, detail::history_terms(w, hist), acc);
        for (std::size_t j = 0; j < M; ++j) {
            d[j] = -(K[j] * U0[j] + nonlinear[j] + scale * acc[j]) / (scale * w[0] + K[j]);
            u[j] = U0[j] + d[j];
        }
        detail::require_finite_modes(u, step + 1, "solve_fractional_burgers");
        hist.push(d);
        const bool snap = (step + 1) % cfg.snapshot_every() == 0;
        if (snap || (step + 1) % 64 == 0) {
            Field f = detail::to_field(fft, grid, u, step + 1, "solve_fractional_burgers");
            if (f.max_abs() > blowup) {
                throw InstabilityError("solve_fractional_burgers blew up", step + 1);
            }
            if (snap) {
                traj.push(static_cast<double>(step + 1) * dt, std::move(f));
            }
        }
    }
    return traj;
}

} // namespace fracwave
