#pragma once
/**
 * @file dispersion.hpp
 * @brief Plane-wave analysis of the lossy wave equation.
 *
 * Substituting p = exp(i(w t - k x)) gives the dispersion relation
 *
 *   R(w, k) = -k^2 + w^2/c0^2 - gamma (i w)^eta (k^2)^{s/2} = 0,
 *
 * with principal branches throughout. Attenuation is alpha = -Im(k).
 * For small gamma the attenuating root is
 *
 *   k ~ w/c0 - i (gamma c0^{1-s} / 2) sin(pi eta / 2) w^{s+eta-1},
 *
 * so alpha follows a power law with exponent y = s + eta - 1.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include "fracwave/core.hpp"
#include "fracwave/errors.hpp"

namespace fracwave {

using cplx = std::complex<double>;

struct AsymptoticLaw {
    double alpha0;
    double y;
    bool valid; ///< dissipative branch, sin(pi eta / 2) > 0
};

namespace detail {

inline cplx loss_factor(double omega, const Medium& m) {
    // (i w)^eta on the principal branch, w > 0.
    return std::pow(omega, m.eta()) * std::polar(1.0, pi * m.eta() / 2.0);
}

inline void require_positive_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("omega must be positive and finite");
    }
}

} // namespace detail

inline cplx dispersion_residual(double omega, cplx k, const Medium& medium) {
    detail::require_positive_omega(omega);
    const double c0 = medium.c0();
    const cplx k2 = k * k;
    cplx r = -k2 + cplx(omega * omega / (c0 * c0), 0.0);
    if (medium.gamma() != 0.0) {
        const cplx ks = medium.s() == 0.0 ? cplx(1.0, 0.0) : std::pow(k2, medium.s() / 2.0);
        r -= medium.gamma() * detail::loss_factor(omega, medium) * ks;
    }
    return r;
}

/// dR/dk, used by the Newton iteration.
inline cplx dispersion_residual_dk(double omega, cplx k, const Medium& medium) {
    cplx d = -2.0 * k;
    if (medium.gamma() != 0.0 && medium.s() != 0.0) {
        const cplx k2 = k * k;
        // d/dk (k^2)^{s/2} = s k (k^2)^{s/2 - 1}
        d -= medium.gamma() * detail::loss_factor(omega, medium) * medium.s() * k *
             std::pow(k2, medium.s() / 2.0 - 1.0);
    }
    return d;
}

struct NewtonOptions {
    std::size_t max_iterations = 100;
    /// |R| <= tol * max((w/c0)^2, |k|^2); the |k|^2 scale only matters when
    /// loss dominates and |k| >> w/c0, where (w/c0)^2 is below roundoff.
    double relative_tolerance = 1e-12;
    double branch_tolerance = 1e-14;     ///< reject Im k > tol * |k|
};

namespace detail {

/// One damped Newton solve from seed k.

inline DispersionPoint newton_root(double omega, const Medium& medium, cplx k,
                                   const NewtonOptions& opts) {
    const double k0 = omega / medium.c0();
    const auto tolerance = [&](cplx kk) {
        return opts.relative_tolerance * std::max(k0 * k0, std::norm(kk));
    };
    cplx r = dispersion_residual(omega, k, medium);
    double rnorm = std::abs(r);
    std::size_t it = 0;
    while (rnorm > tolerance(k)) {
        if (it++ >= opts.max_iterations) {
            std::ostringstream os;
            os << "dispersion root did not converge at omega=" << omega << " (|R|=" << rnorm
               << ")";
            throw ConvergenceError(os.str(), omega, k, rnorm);
        }
        const cplx dr = dispersion_residual_dk(omega, k, medium);
        if (dr == cplx(0.0, 0.0) || !std::isfinite(std::abs(dr))) {
            throw ConvergenceError("singular Newton derivative", omega, k, rnorm);
        }
        cplx step = -r / dr;
        // Halve the step until the residual decreases.
        cplx trial = k + step;
        cplx rt = dispersion_residual(omega, trial, medium);
        int halvings = 0;
        while (!(std::abs(rt) < rnorm) && halvings < 60) {
            step *= 0.5;
            trial = k + step;
            rt = dispersion_residual(omega, trial, medium);
            ++halvings;
        }
        if (!(std::abs(rt) < rnorm)) {
            // No descent direction left: accept only if already at rounding level.
            if (rnorm <= 64.0 * tolerance(k)) {
                break;
            }
            throw ConvergenceError("damped Newton stalled", omega, k, rnorm);
        }
        k = trial;
        r = rt;
        rnorm = std::abs(rt);
    }
    if (k.imag() > opts.branch_tolerance * std::abs(k)) {
        std::ostringstream os;
        os << "root at omega=" << omega << " lies on the growing branch (Im k = " << k.imag()
           << ")";
        throw BranchError(os.str(), omega, k);
    }
    if (k.real() < 0.0) {
        throw BranchError("root converged to the backward-propagating branch", omega, k);
    }
    return DispersionPoint(omega, k);
}

} // namespace detail

/**
 * Attenuating root of the dispersion relation by damped Newton iteration.
 * The default seed is the lossless root w/c0; `seed` overrides it for
 * continuation along a sweep. In strongly lossy regimes Newton from that
 * seed can land on the growing or backward branch, so a few fixed seeds in
 * the lower-right quadrant are tried before giving up; the error from the
 * first attempt is the one reported.
 */
inline DispersionPoint solve_wavenumber(double omega, const Medium& medium,
                                        std::optional<cplx> seed = std::nullopt,
                                        const NewtonOptions& opts = {}) {
    detail::require_positive_omega(omega);
    const double k0 = omega / medium.c0();
    if (medium.lossless()) {
        return DispersionPoint(omega, cplx(k0, 0.0));
    }
    const cplx first = seed.value_or(cplx(k0, 0.0));
    std::exception_ptr first_error;
    try {
        return detail::newton_root(omega, medium, first, opts);
    } catch (const ConvergenceError&) {
        first_error = std::current_exception();
    } catch (const BranchError&) {
        first_error = std::current_exception();
    }
    std::vector<cplx> centres = {cplx(k0, 0.0)};
    if (medium.s() < 2.0) {
        // Loss-dominated balance k^{2-s} = -gamma (i w)^eta, which holds when
        // the loss term swamps w^2/c0^2.
        const double phi = pi * medium.eta() / 2.0 - pi;
        const double e = 1.0 / (2.0 - medium.s());
        centres.push_back(std::polar(std::pow(medium.gamma() * std::pow(omega, medium.eta()), e),
                                     phi * e));
    }
    for (const cplx c : centres) {
        for (const double mag : {1.0, 3.0, 0.3, 10.0, 0.1}) {
            for (const double deg : {0.0, -15.0, -40.0, -70.0}) {
                try {
                    return detail::newton_root(omega, medium,
                                               c * std::polar(mag, deg * pi / 180.0), opts);
                } catch (const ConvergenceError&) {
                } catch (const BranchError&) {
                }
            }
        }
    }
    std::rethrow_exception(first_error);
}

/// First-order-in-gamma attenuation law alpha0 * w^y.
inline AsymptoticLaw asymptotic_attenuation(const Medium& medium) {
    const double sine = std::sin(pi * medium.eta() / 2.0);
    const double alpha0 =
        medium.gamma() * std::pow(medium.c0(), 1.0 - medium.s()) / 2.0 * sine;
    return {alpha0, medium.exponent(), sine > 0.0};
}

/// Sweep failure with the offending frequency attached.
class SweepError : public Error {
  public:
    SweepError(const std::string& msg, double omega) : Error(msg), omega_(omega) {}
    double omega() const noexcept { return omega_; }

  private:
    double omega_;
};

struct SweepOptions {
    bool continuation = true; ///< seed each root from the previous one
    NewtonOptions newton{};
};

/**
 * One dispersion root per frequency. With continuation the previous root,
 * rescaled by the frequency ratio, seeds the next Newton solve.
 */
inline std::vector<DispersionPoint> dispersion_sweep(const Medium& medium,
                                                     std::span<const double> omegas,
                                                     const SweepOptions& opts = {}) {
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (!(omegas[i] > 0.0) || !std::isfinite(omegas[i])) {
            throw DomainError("sweep frequencies must be positive");
        }
        if (i > 0 && !(omegas[i] > omegas[i - 1])) {
            throw DomainError("sweep frequencies must be strictly increasing");
        }
    }
    std::vector<DispersionPoint> out;
    out.reserve(omegas.size());
    std::optional<cplx> seed;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const double w = omegas[i];
        try {
            out.push_back(solve_wavenumber(w, medium, seed, opts.newton));
        } catch (const ConvergenceError& e) {
            throw SweepError(std::string(e.what()) + " [sweep omega=" + std::to_string(w) + "]",
                             w);
        } catch (const BranchError& e) {
            throw SweepError(std::string(e.what()) + " [sweep omega=" + std::to_string(w) + "]",
                             w);
        }
        if (opts.continuation && i + 1 < omegas.size()) {
            seed = out.back().k() * (omegas[i + 1] / w);
        }
    }
    return out;
}

/// n logarithmically spaced frequencies from lo to hi inclusive.
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw DomainError("log_spaced requires 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace fracwave
