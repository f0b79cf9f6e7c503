#pragma once
/**
 * @file analysis.hpp
 * @brief Attenuation extraction from solver output and power-law fitting.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracwave/core.hpp"
#include "fracwave/dispersion.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/field.hpp"

namespace fracwave {

struct LinearFit {
    double slope;
    double intercept;
    double r_squared;
    double rms_residual;
};

/// Ordinary least squares y = slope * x + intercept.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ShapeError("linear_fit: x and y differ in length");
    }
    if (x.size() < 2) {
        throw InsufficientDataError("linear_fit needs at least two points");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw InsufficientDataError("linear_fit: abscissae are all equal");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (slope * x[i] + intercept);
        ss_res += r * r;
    }
    double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    r2 = std::clamp(r2, 0.0, 1.0);
    return {slope, intercept, r2, std::sqrt(ss_res / n)};
}

/// Least-squares fit of ln(alpha) = ln(alpha0) + y ln(omega).
inline PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw InsufficientDataError("fit_power_law needs at least three points");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    lx.reserve(points.size());
    ly.reserve(points.size());
    for (const auto& [omega, alpha] : points) {
        if (!(omega > 0.0)) {
            throw DomainError("fit_power_law: omega must be positive");
        }
        if (!(alpha > 0.0)) {
            throw DomainError("fit_power_law: alpha must be positive to take its logarithm");
        }
        lx.push_back(std::log(omega));
        ly.push_back(std::log(alpha));
    }
    const LinearFit f = linear_fit(lx, ly);
    return {std::exp(f.intercept), f.slope, f.rms_residual};
}

inline PowerLawFit fit_power_law(std::span<const DispersionPoint> points) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(points.size());
    for (const auto& p : points) {
        pts.emplace_back(p.omega(), p.alpha());
    }
    return fit_power_law(pts);
}

/// Complex Fourier coefficient (1/n) sum_i u_i exp(-i k_m x_i) of integer mode m.
inline std::complex<double> mode_coefficient(const Field& f, long m) {
    const Grid1D& g = f.grid();
    const double k = 2.0 * pi * static_cast<double>(m) / g.length();
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < g.n(); ++i) {
        acc += f[i] * std::polar(1.0, -k * g.x(i));
    }
    return acc / static_cast<double>(g.n());
}

/// Coefficient b_m of sin(k_m x) in the field's Fourier series.
inline double sine_projection(const Field& f, long m) {
    return -2.0 * mode_coefficient(f, m).imag();
}

/**
 * Exponential decay rate of mode m over snapshots with t in [t_begin, t_end].
 * Oscillating modes (three or more interior maxima of |c_m|) are fitted
 * through parabolically refined peaks; monotone modes through every sample.
 */
inline double modal_decay_rate(const Trajectory& traj, long m, double t_begin, double t_end) {
    std::vector<double> t;
    std::vector<double> a;
    for (const Snapshot& s : traj.snapshots()) {
        if (s.t >= t_begin && s.t <= t_end) {
            t.push_back(s.t);
            a.push_back(std::abs(mode_coefficient(s.field, m)));
        }
    }
    if (t.size() < 3) {
        throw InsufficientDataError("modal_decay_rate: fewer than three snapshots in window");
    }
    std::vector<double> pt;
    std::vector<double> pa;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i] > a[i - 1] && a[i] >= a[i + 1] && a[i - 1] > 0.0 && a[i + 1] > 0.0) {
            const double l0 = std::log(a[i - 1]);
            const double l1 = std::log(a[i]);
            const double l2 = std::log(a[i + 1]);
            const double denom = l0 - 2.0 * l1 + l2;
            double off = denom != 0.0 ? 0.5 * (l0 - l2) / denom : 0.0;
            off = std::clamp(off, -0.5, 0.5);
            const double h = 0.5 * (t[i + 1] - t[i - 1]);
            pt.push_back(t[i] + off * h);
            pa.push_back(l1 - 0.25 * (l0 - l2) * off);
        }
    }
    if (pt.size() >= 3) {
        return -linear_fit(pt, pa).slope;
    }
    std::vector<double> la;
    la.reserve(a.size());
    for (double v : a) {
        if (!(v > 0.0)) {
            throw DomainError("modal_decay_rate: mode amplitude vanished inside the window");
        }
        la.push_back(std::log(v));
    }
    return -linear_fit(t, la).slope;
}

/**
 * Conserved discrete energy of the leapfrog wave scheme between two
 * consecutive levels, per unit length:
 *   sum_k |p^{n+1}_k - p^n_k|^2 / (c0 dt)^2 + k^2 Re(p^{n+1}_k conj(p^n_k)).
 */
inline double discrete_wave_energy(const Field& current, const Field& next, double c0, double dt) {
    if (!(current.grid() == next.grid())) {
        throw ShapeError("energy requires fields on one grid");
    }
    const Grid1D& g = current.grid();
    RealFft fft(g.n());
    const auto a = fft.forward(current.values());
    const auto b = fft.forward(next.values());
    double e = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double k = g.abs_wavenumber(j);
        const double weight = (j == 0 || 2 * j == g.n()) ? 1.0 : 2.0;
        const double kin = std::norm(b[j] - a[j]) / (c0 * c0 * dt * dt);
        const double pot = k * k * (b[j] * std::conj(a[j])).real();
        e += weight * (kin + pot);
    }
    const double n = static_cast<double>(g.n());
    return e / (n * n);
}

struct AttenuationMeasurement {
    double omega;
    double alpha_measured;
    std::pair<double, double> fit_window;
    double r_squared;
    double wavenumber_measured; ///< -d(phase)/dx of the harmonic phasor
};

struct MeasurementOptions {
    double steady_tolerance = 0.01;   ///< period-to-period amplitude change
    double min_wavelengths = 2.0;
    std::size_t min_samples_per_period = 8;
};

/// Time step not exceeding dt_max that puts an integer number of steps in one period.
inline double harmonic_time_step(double omega, double dt_max) {
    if (!(omega > 0.0) || !(dt_max > 0.0)) {
        throw DomainError("harmonic_time_step needs positive omega and dt_max");
    }
    const double period = 2.0 * pi / omega;
    const double steps = std::ceil(period / dt_max - 1e-9);
    return period / steps;
}

/**
 * Spatial attenuation of a steady monochromatic wave. For every grid point
 * in the window the omega-phasor is projected over the last source period
 * (and the one before, for the steady-state gate); ln|phasor| is then
 * fitted against x and alpha = -slope.
 */
inline AttenuationMeasurement measure_spatial_attenuation(const Trajectory& traj, double omega,
                                                          std::pair<double, double> window,
                                                          const MeasurementOptions& opts = {}) {
    if (!(omega > 0.0)) {
        throw DomainError("omega must be positive");
    }
    if (traj.size() < 3) {
        throw InsufficientDataError("trajectory too short for harmonic analysis");
    }
    const Grid1D& g = traj.grid();
    const auto [x_min, x_max] = window;
    if (!(x_min >= 0.0 && x_max <= g.length() && x_max > x_min)) {
        throw ConfigError("measurement window must lie inside the domain");
    }

    const auto snaps = traj.snapshots();
    const std::size_t ns = snaps.size();
    const double spacing = snaps[ns - 1].t - snaps[ns - 2].t;
    const double period = 2.0 * pi / omega;
    const double spp_exact = period / spacing;
    const auto spp = static_cast<std::size_t>(std::llround(spp_exact));
    if (spp < opts.min_samples_per_period) {
        throw ConfigError("snapshot cadence too coarse for the source frequency");
    }
    if (std::abs(spp_exact - static_cast<double>(spp)) > 1e-6 * spp_exact) {
        throw ConfigError("snapshot spacing must divide the source period");
    }
    if (ns < 2 * spp) {
        throw InsufficientDataError("need at least two source periods of snapshots");
    }
    for (std::size_t i = ns - 2 * spp + 1; i < ns; ++i) {
        if (std::abs((snaps[i].t - snaps[i - 1].t) - spacing) > 1e-9 * spacing) {
            throw ConfigError("snapshots must be uniformly spaced over the analysis periods");
        }
    }

    std::vector<std::complex<double>> rot(2 * spp);
    for (std::size_t q = 0; q < 2 * spp; ++q) {
        rot[q] = std::polar(1.0, -omega * snaps[ns - 2 * spp + q].t);
    }

    std::vector<double> xs;
    std::vector<double> log_amp;
    std::vector<double> phase;
    double prev_phase = 0.0;
    double unwrap = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double x = g.x(i);
        if (x < x_min || x > x_max) {
            continue;
        }
        std::complex<double> older(0.0, 0.0);
        std::complex<double> last(0.0, 0.0);
        for (std::size_t q = 0; q < spp; ++q) {
            older += snaps[ns - 2 * spp + q].field[i] * rot[q];
            last += snaps[ns - spp + q].field[i] * rot[spp + q];
        }
        const double scale = 2.0 / static_cast<double>(spp);
        older *= scale;
        last *= scale;
        const double amp = std::abs(last);
        if (!(amp > 0.0)) {
            throw TransientError("no harmonic signal at x = " + std::to_string(x));
        }
        if (std::abs(amp - std::abs(older)) > opts.steady_tolerance * amp) {
            throw TransientError("signal not steady at x = " + std::to_string(x) +
                                 " (period-to-period amplitude change above tolerance)");
        }
        double ph = std::arg(last);
        if (!xs.empty()) {
            double jump = ph - prev_phase;
            while (jump > pi) {
                jump -= 2.0 * pi;
                unwrap -= 2.0 * pi;
            }
            while (jump < -pi) {
                jump += 2.0 * pi;
                unwrap += 2.0 * pi;
            }
        }
        prev_phase = ph;
        xs.push_back(x);
        log_amp.push_back(std::log(amp));
        phase.push_back(ph + unwrap);
    }
    if (xs.size() < 3) {
        throw InsufficientDataError("measurement window contains fewer than three grid points");
    }
    const double k_re = -linear_fit(xs, phase).slope;
    const double wavelength = 2.0 * pi / std::abs(k_re);
    if (!(x_max - x_min >= opts.min_wavelengths * wavelength)) {
        throw ConfigError("measurement window shorter than " +
                          std::to_string(opts.min_wavelengths) + " wavelengths");
    }
    const LinearFit amp_fit = linear_fit(xs, log_amp);
    return {omega, -amp_fit.slope, window, amp_fit.r_squared, k_re};
}

struct ComparisonRow {
    double omega;
    std::complex<double> k;
    double alpha_root;
    double alpha_asymptotic;
    std::optional<double> relative_gap; ///< undefined when alpha_root == 0
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::optional<PowerLawFit> fit; ///< absent when any root alpha is not positive
    double y_analytic;

    double max_relative_gap() const {
        double m = 0.0;
        for (const auto& r : rows) {
            if (r.relative_gap) {
                m = std::max(m, *r.relative_gap);
            }
        }
        return m;
    }
};

/// Root-finder versus first-order asymptotic attenuation at each frequency.
inline ComparisonTable compare_dispersion(const Medium& medium, std::span<const double> omegas,
                                          const SweepOptions& opts = {}) {
    const auto points = dispersion_sweep(medium, omegas, opts);
    const AsymptoticLaw law = asymptotic_attenuation(medium);
    ComparisonTable table{{}, std::nullopt, medium.exponent()};
    bool all_positive = points.size() >= 3;
    for (const auto& p : points) {
        const double asym = law.alpha0 * std::pow(p.omega(), law.y);
        std::optional<double> gap;
        if (p.alpha() != 0.0) {
            gap = std::abs(p.alpha() - asym) / std::abs(p.alpha());
        }
        if (!(p.alpha() > 0.0)) {
            all_positive = false;
        }
        table.rows.push_back({p.omega(), p.k(), p.alpha(), asym, gap});
    }
    if (all_positive) {
        table.fit = fit_power_law(points);
    }
    return table;
}

} // namespace fracwave
