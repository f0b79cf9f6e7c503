#pragma once
/**
 * @file acceptance.hpp
 * @brief End-to-end acceptance criteria, shared by the acceptance test
 *        binary and `fracwave verify`.
 *
 * Each criterion runs at its pinned tolerance. Quick mode shrinks grids
 * and step counts; where that changes the achievable accuracy the looser
 * tolerance is stated in the criterion's detail line.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracwave/fracwave.hpp"
#include "fracwave/verify/oracles.hpp"

namespace fracwave::verify {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

struct AcceptanceOptions {
    bool quick = false;
    /// Media table used for the loader check; the built-in rows when absent.
    std::optional<std::string> media_file;
};

namespace detail {

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline std::string table1_csv() {
    std::ostringstream os;
    os << media_csv_header << '\n';
    for (const auto& e : builtin_media()) {
        if (e.attenuation.has_prefactor()) {
            os << e.name << ',' << *e.attenuation.alpha0_db() << ',' << e.attenuation.y() << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

inline CriterionResult exponent_identity() {
    const std::vector<std::pair<double, double>> pairs = {
        {0.0, 1.0}, {2.0, 1.0}, {1.0, 1.0}, {1.2, 1.5}, {0.5, 1.3}};
    const auto omegas = log_spaced(1.0, 10.0, 16);
    bool ok = true;
    double worst = 0.0;
    std::ostringstream os;
    for (const auto& [s, eta] : pairs) {
        const Medium m(1.0, 1e-3, eta, s);
        const auto pts = dispersion_sweep(m, omegas);
        const PowerLawFit fit = fit_power_law(pts);
        const double dy = std::abs(fit.y - m.exponent());
        worst = std::max(worst, dy);
        ok = ok && dy <= 0.01;
        os << "(s=" << s << ",eta=" << eta << ") y=" << fit.y << "; ";
    }
    os << "max |dy| = " << worst << " (tol 0.01)";
    return {1, "exponent identity y = s + eta - 1", ok, os.str(), 0.0};
}

inline CriterionResult telegrapher_plateau() {
    const Medium m(1.0, 0.01, 1.0, 0.0);
    const auto omegas = log_spaced(1.0, 10.0, 16);
    const auto pts = dispersion_sweep(m, omegas);
    double lo = pts.front().alpha();
    double hi = lo;
    for (const auto& p : pts) {
        lo = std::min(lo, p.alpha());
        hi = std::max(hi, p.alpha());
    }
    const double variation = (hi - lo) / lo;
    const PowerLawFit fit = fit_power_law(pts);
    const bool ok = variation < 0.01 && std::abs(fit.y) <= 0.01;
    std::ostringstream os;
    os << "alpha variation " << variation << " (tol 0.01), y_fit = " << fit.y << " (tol 0.01)";
    return {2, "Telegrapher frequency-independent attenuation", ok, os.str(), 0.0};
}

inline CriterionResult thermoviscous_square_law() {
    const auto omegas = log_spaced(1.0, 10.0, 16);
    const Medium small(1.0, 1e-3, 1.0, 2.0);
    const PowerLawFit fit = fit_power_law(dispersion_sweep(small, omegas));
    double worst = 0.0;
    for (double gamma : {1e-3, 1e-2}) {
        const Medium m(1.0, gamma, 1.0, 2.0);
        for (const auto& p : dispersion_sweep(m, omegas)) {
            const double exact = -oracle::thermoviscous_root(p.omega(), 1.0, gamma).imag();
            worst = std::max(worst, rel(p.alpha(), exact));
        }
    }
    const bool ok = std::abs(fit.y - 2.0) <= 0.01 && worst <= 1e-10;
    std::ostringstream os;
    os << "y_fit = " << fit.y << " (2 +/- 0.01), max rel. error vs closed form = " << worst
       << " (tol 1e-10)";
    return {3, "thermoviscous frequency-squared law", ok, os.str(), 0.0};
}

inline CriterionResult bound_truth_table() {
    struct Row {
        double lambda, beta;
        bool satisfied;
        Regime regime;
    };
    const std::vector<Row> rows = {
        {2.0, 0.1, false, Regime::SubDiffusion},  {2.0, 0.5, false, Regime::SubDiffusion},
        {2.0, 0.9, false, Regime::SubDiffusion},  {2.0, 1.5, true, Regime::SuperDiffusion},
        {1.5, 1.0, true, Regime::SuperDiffusion}, {0.0, 0.5, true, Regime::Other},
        {2.0, 1.0, true, Regime::NormalDiffusion}, {2.0, 2.0, true, Regime::NormalWave},
    };
    bool ok = true;
    std::ostringstream os;
    for (const Row& r : rows) {
        const BoundVerdict v = check_order_bound(r.lambda, r.beta);
        const bool row_ok = v.satisfied == r.satisfied && v.regime == r.regime &&
                            v.implied_y == r.lambda - r.beta + 1.0;
        ok = ok && row_ok;
        if (!row_ok) {
            os << "mismatch at (" << r.lambda << ", " << r.beta << "); ";
        }
    }
    os << rows.size() << " rows checked";
    return {4, "order bound -1 <= lambda - beta <= 1", ok, os.str(), 0.0};
}

inline CriterionResult fdwe_correctness(bool quick) {
    const Grid1D grid(16, 2.0 * pi);
    const Field u0 = Field::sample(grid, [](double x) { return std::sin(x); });
    const double dt = quick ? 1e-3 : 1e-4;
    const double wave_tol = quick ? 5e-3 : 1e-3;
    std::ostringstream os;

    const auto steps_to = [&](double t) { return static_cast<std::size_t>(std::llround(t / dt)); };

    const auto heat = solve_fdwe(u0, std::nullopt, FdweParams(2.0, 1.0, 1.0),
                                 SolverConfig(dt, steps_to(1.0), steps_to(1.0)));
    const double heat_err = std::abs(sine_projection(heat.back().field, 1) - std::exp(-1.0));

    const std::size_t period_steps = steps_to(2.0 * pi);
    const auto wave = solve_fdwe(u0, Field::zeros(grid), FdweParams(2.0, 2.0, 1.0),
                                 SolverConfig(dt, period_steps, std::max<std::size_t>(1, period_steps / 64)));
    double wave_err = 0.0;
    for (const Snapshot& s : wave.snapshots()) {
        wave_err = std::max(wave_err, std::abs(sine_projection(s.field, 1) - std::cos(s.t)));
    }

    const auto frac = solve_fdwe(u0, std::nullopt, FdweParams(2.0, 0.5, 1.0),
                                 SolverConfig(dt, steps_to(1.0), steps_to(0.25)));
    double frac_err = 0.0;
    for (const Snapshot& s : frac.snapshots()) {
        if (s.t == 0.0) {
            continue;
        }
        const double ml = oracle::mittag_leffler(0.5, -std::sqrt(s.t));
        frac_err = std::max(frac_err, std::abs(sine_projection(s.field, 1) - ml));
    }
    const bool ok = heat_err <= 1e-3 && wave_err <= wave_tol && frac_err <= 1e-2;
    os << "dt=" << dt << ": heat err " << heat_err << " (tol 1e-3), wave err " << wave_err
       << " (tol " << wave_tol << "), Mittag-Leffler err " << frac_err << " (tol 1e-2)";
    return {5, "FDWE eigenmode solutions", ok, os.str(), 0.0};
}

/// Spatial attenuation of a monochromatic source run on a domain 40 wavelengths long.
inline AttenuationMeasurement source_run(const Medium& m, double omega, std::size_t n) {
    const double wavelength = 2.0 * pi * m.c0() / omega;
    const Grid1D grid(n, 40.0 * wavelength);
    const double dt = harmonic_time_step(omega, 0.5 * grid.dx() / m.c0());
    const auto steps = static_cast<std::size_t>(std::ceil(22.0 * wavelength / m.c0() / dt));
    const MonochromaticSource src{omega, 4.0 * wavelength, wavelength / 10.0};
    const auto traj = solve_lossy_wave(Field::zeros(grid), Field::zeros(grid), m,
                                       SolverConfig(dt, steps, 1), src);
    return measure_spatial_attenuation(traj, omega, {5.0 * wavelength, 17.0 * wavelength});
}

inline CriterionResult simulation_closure(bool quick) {
    const std::size_t n = quick ? 512 : 1024;
    const Medium tv(1.0, 0.01, 1.0, 2.0);
    const double alpha_sim = source_run(tv, 2.0, n).alpha_measured;
    const double alpha_root = solve_wavenumber(2.0, tv).alpha();
    const double gap = rel(alpha_sim, alpha_root);

    const Medium frac(1.0, 1e-3, 1.5, 1.2);
    std::vector<std::pair<double, double>> pts;
    for (double w : {4.0, 8.0, 16.0}) {
        pts.emplace_back(w, source_run(frac, w, n).alpha_measured);
    }
    const PowerLawFit fit = fit_power_law(pts);
    const bool ok = gap <= 0.02 && std::abs(fit.y - 1.7) <= 0.05;
    std::ostringstream os;
    os << "n=" << n << ": thermoviscous alpha sim " << alpha_sim << " vs root " << alpha_root
       << " (rel " << gap << ", tol 0.02); fractional y_fit = " << fit.y << " (1.7 +/- 0.05)";
    return {6, "simulation vs dispersion closure", ok, os.str(), 0.0};
}

inline CriterionResult parabolic_reduction(bool quick) {
    // Mode 1 on a length-4pi domain has k = 1/2, so s = 0 and s = 1 differ.
    const Grid1D grid(16, 4.0 * pi);
    const double k = 0.5;
    const double dt = quick ? 2e-4 : 1e-4;
    const auto steps = static_cast<std::size_t>(std::llround(0.05 / dt));
    bool ok = true;
    std::ostringstream os;
    for (double s : {0.0, 1.0}) {
        const Medium m(1.0, 100.0, 1.0, s);
        const FdweParams p = map_lossy_to_fdwe(m);
        const Field u0 = Field::sample(grid, [&](double x) { return std::sin(k * x); });
        // Start on the loss-dominated branch: v0 = -kappa |k|^lambda u0.
        const double rate = p.kappa() * std::pow(k, p.lambda());
        const Field v0 = Field::sample(grid, [&](double x) { return -rate * std::sin(k * x); });
        const auto full = solve_lossy_wave(u0, v0, m, SolverConfig(dt, steps, 1));
        const auto reduced = solve_fdwe(u0, std::nullopt, p, SolverConfig(dt, steps, 1));
        const double r_full = modal_decay_rate(full, 1, 0.005, 0.05);
        const double r_red = modal_decay_rate(reduced, 1, 0.005, 0.05);
        const double gap = rel(r_red, r_full);
        ok = ok && gap <= 0.05;
        os << "(eta=1,s=" << s << ",gamma=100) full " << r_full << " vs FDWE " << r_red
           << " (rel " << gap << "); ";
    }
    os << "tol 0.05";
    return {7, "parabolic reduction consistency", ok, os.str(), 0.0};
}

inline CriterionResult unit_conversion(const std::optional<std::string>& media_file) {
    std::ostringstream os;
    const auto water = *find_medium(builtin_media(), "Water");
    const double si = to_si(water.attenuation).alpha0;
    const double hand = oracle::clinical_to_si_by_hand(0.0022, 2.0);
    const double water_err = rel(si, hand);

    double trip = 0.0;
    for (double y : {0.0, 0.5, 1.0, 1.3, 1.5, 1.7, 2.0}) {
        const ClinicalAttenuation c(0.37, y);
        const auto back = from_si(to_si(c).alpha0, y);
        trip = std::max(trip, rel(*back.alpha0_db(), 0.37));
        const auto fwd = to_si(from_si(2.5e-3, y));
        trip = std::max(trip, rel(fwd.alpha0, 2.5e-3));
    }

    std::vector<MediaEntry> loaded;
    if (media_file) {
        loaded = load_media(*media_file);
    } else {
        std::istringstream in(table1_csv());
        loaded = parse_media(in);
    }
    std::size_t matched = 0;
    for (const auto& e : builtin_media()) {
        if (!e.attenuation.has_prefactor()) {
            continue;
        }
        const auto hit = find_medium(loaded, e.name);
        if (hit && hit->attenuation.alpha0_db() == e.attenuation.alpha0_db() &&
            hit->attenuation.y() == e.attenuation.y()) {
            ++matched;
        }
    }
    const bool ok = water_err <= 1e-12 && trip <= 1e-12 && matched == 4;
    os << "Water SI " << si << " vs hand " << hand << " (rel " << water_err
       << "), round-trip max rel " << trip << " (tol 1e-12), reference rows loaded " << matched
       << "/4";
    return {8, "clinical/SI unit conversion", ok, os.str(), 0.0};
}

inline CriterionResult operator_checks() {
    std::ostringstream os;
    double gl_err = 0.0;
    for (double order : {0.3, 0.5, 1.0, 1.5, 2.0}) {
        const GlWeights w = gl_weights(order, 64);
        for (std::size_t j = 0; j <= 64; ++j) {
            const double ref = oracle::gl_weight_gamma(order, j);
            const double err = ref == 0.0 ? std::abs(w[j]) : rel(w[j], ref);
            gl_err = std::max(gl_err, err);
        }
    }

    const Grid1D grid(64, 2.0 * pi);
    const auto trig = [](double x) { return std::sin(3.0 * x) + 0.5 * std::cos(7.0 * x) - 0.25; };
    const auto minus_dxx = [](double x) { return 9.0 * std::sin(3.0 * x) + 24.5 * std::cos(7.0 * x); };
    const auto abs_dx = [](double x) { return 3.0 * std::sin(3.0 * x) + 3.5 * std::cos(7.0 * x); };
    const Field f = Field::sample(grid, trig);
    const Field lap2 = apply_fractional_laplacian(f, 2.0);
    const Field lap1 = apply_fractional_laplacian(f, 1.0);
    double int_err = 0.0;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        int_err = std::max(int_err, std::abs(lap2[i] - minus_dxx(grid.x(i))) / 24.5);
        int_err = std::max(int_err, std::abs(lap1[i] - abs_dx(grid.x(i))) / 3.5);
    }

    const Field g = Field::sample(grid, [](double x) { return std::exp(std::cos(x)); });
    std::vector<double> comb(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        comb[i] = 2.0 * f[i] - 3.0 * g[i];
    }
    double lin_err = 0.0;
    for (double lam : {0.4, 1.0, 1.7}) {
        const Field lhs = apply_fractional_laplacian(Field(grid, comb), lam);
        const Field af = apply_fractional_laplacian(f, lam);
        const Field ag = apply_fractional_laplacian(g, lam);
        double scale = 0.0;
        for (std::size_t i = 0; i < grid.n(); ++i) {
            scale = std::max(scale, std::abs(lhs[i]));
        }
        for (std::size_t i = 0; i < grid.n(); ++i) {
            lin_err = std::max(lin_err, std::abs(lhs[i] - (2.0 * af[i] - 3.0 * ag[i])) / scale);
        }
    }

    double semi_err = 0.0;
    for (auto [a, b] : {std::pair{0.5, 1.5}, std::pair{1.3, 2.0}, std::pair{2.0, 2.0},
                        std::pair{0.0, 1.1}}) {
        const auto sa = wavenumber_power(a, grid);
        const auto sb = wavenumber_power(b, grid);
        const auto sab = wavenumber_power(a + b, grid);
        for (std::size_t j = 0; j < grid.n(); ++j) {
            const double err =
                sab[j] == 0.0 ? std::abs(sa[j] * sb[j]) : rel(sa[j] * sb[j], sab[j]);
            semi_err = std::max(semi_err, err);
        }
    }
    const bool ok = gl_err <= 1e-12 && int_err <= 1e-12 && lin_err <= 1e-12 && semi_err <= 1e-12;
    os << "GL vs Gamma " << gl_err << ", integer-order " << int_err << ", linearity " << lin_err
       << ", semigroup " << semi_err << " (all tol 1e-12)";
    return {9, "operator checks", ok, os.str(), 0.0};
}

inline CriterionResult timed(const std::function<CriterionResult()>& fn,
                             std::optional<double> limit_seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = fn();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        r = {0, "", false, std::string("exception: ") + e.what(), 0.0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds) {
        std::ostringstream os;
        os << "; runtime " << r.seconds << " s (limit " << *limit_seconds << " s)";
        r.detail += os.str();
        r.passed = r.passed && r.seconds < *limit_seconds;
    }
    return r;
}

} // namespace detail

/// Run every criterion in order. Media parse failures propagate as ParseError.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {}) {
    using detail::timed;
    const bool q = opts.quick;
    std::vector<std::pair<std::function<CriterionResult()>, std::optional<double>>> jobs = {
        {detail::exponent_identity, 5.0},
        {detail::telegrapher_plateau, std::nullopt},
        {detail::thermoviscous_square_law, std::nullopt},
        {detail::bound_truth_table, std::nullopt},
        {[q] { return detail::fdwe_correctness(q); }, 30.0},
        {[q] { return detail::simulation_closure(q); }, 60.0},
        {[q] { return detail::parabolic_reduction(q); }, std::nullopt},
        {[&opts] { return detail::unit_conversion(opts.media_file); }, std::nullopt},
        {detail::operator_checks, std::nullopt},
    };
    std::vector<CriterionResult> out;
    int id = 1;
    for (const auto& [fn, limit] : jobs) {
        CriterionResult r = timed(fn, limit);
        if (r.id == 0) {
            r.id = id;
            r.name = "criterion " + std::to_string(id);
        }
        out.push_back(std::move(r));
        ++id;
    }
    return out;
}

inline std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << '#' << r.id << ' ' << r.name << ": " << r.detail;
    return os.str();
}

} // namespace fracwave::verify
