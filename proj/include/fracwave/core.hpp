#pragma once
/**
 * @file core.hpp
 * @brief Parameter types for the fractional diffusion-wave and lossy wave
 *        equations, plus the mappings and order-bound checks between them.
 *
 * Model equations (one spatial dimension, nondimensional by default):
 *
 *   FDWE:       d^beta u / dt^beta = -kappa (-Laplacian)^{lambda/2} u
 *   Lossy wave: Laplacian p = (1/c0^2) p_tt + gamma d^eta/dt^eta (-Laplacian)^{s/2} p
 *
 * All types here are immutable after construction and validate their
 * invariants in the constructor.
 */

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include "fracwave/errors.hpp"

namespace fracwave {

inline constexpr double pi = 3.14159265358979323846;

namespace detail {

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

} // namespace detail

/// Orders and diffusivity of the fractional diffusion-wave equation.
class FdweParams {
  public:
    /**
     * @param lambda spatial order, 0 <= lambda <= 2 (lambda = 0 is the
     *               identity operator, reached from s = 0 lossy media)
     * @param beta   temporal order, 0 < beta <= 2
     * @param kappa  generalized diffusivity [length^lambda / time^beta], > 0
     */
    FdweParams(double lambda, double beta, double kappa)
        : lambda_(lambda), beta_(beta), kappa_(kappa) {
        detail::require_finite(lambda, "lambda");
        detail::require_finite(beta, "beta");
        detail::require_finite(kappa, "kappa");
        if (lambda < 0.0 || lambda > 2.0) {
            throw DomainError("lambda must satisfy 0 <= lambda <= 2");
        }
        if (beta <= 0.0 || beta > 2.0) {
            throw DomainError("beta must satisfy 0 < beta <= 2");
        }
        if (kappa <= 0.0) {
            throw DomainError("kappa must be positive");
        }
    }

    double lambda() const noexcept { return lambda_; }
    double beta() const noexcept { return beta_; }
    double kappa() const noexcept { return kappa_; }

  private:
    double lambda_;
    double beta_;
    double kappa_;
};

/// Parameters of the time-space fractional lossy wave equation.
class Medium {
  public:
    Medium(std::string name, double c0, double gamma, double eta, double s)
        : name_(std::move(name)), c0_(c0), gamma_(gamma), eta_(eta), s_(s) {
        detail::require_finite(c0, "c0");
        detail::require_finite(gamma, "gamma");
        detail::require_finite(eta, "eta");
        detail::require_finite(s, "s");
        if (c0 <= 0.0) {
            throw DomainError("c0 must be positive");
        }
        if (gamma < 0.0) {
            throw DomainError("gamma must be non-negative");
        }
        if (s < 0.0 || s > 2.0) {
            throw DomainError("s must satisfy 0 <= s <= 2");
        }
        if (eta <= 0.0 || eta > 3.0) {
            throw DomainError("eta must satisfy 0 < eta <= 3");
        }
        if (eta == 2.0) {
            // sin(pi*eta/2) vanishes: the loss term would not dissipate.
            throw DomainError("eta = 2 is excluded (loss term is non-dissipative)");
        }
        const double y = s + eta - 1.0;
        if (y < 0.0 || y > 2.0) {
            throw DomainError("power-law exponent s + eta - 1 must lie in [0, 2]");
        }
    }

    Medium(double c0, double gamma, double eta, double s) : Medium("", c0, gamma, eta, s) {}

    const std::string& name() const noexcept { return name_; }
    double c0() const noexcept { return c0_; }
    double gamma() const noexcept { return gamma_; }
    double eta() const noexcept { return eta_; }
    double s() const noexcept { return s_; }

    /// Power-law exponent y = s + eta - 1 predicted for this medium.
    double exponent() const noexcept { return s_ + eta_ - 1.0; }
    bool lossless() const noexcept { return gamma_ == 0.0; }

  private:
    std::string name_;
    double c0_;
    double gamma_;
    double eta_;
    double s_;
};

/// Fitted alpha(omega) = alpha0 * |omega|^y.
struct PowerLawFit {
    double alpha0;
    double y;
    double residual; ///< RMS of the log-log residuals

    /// Exponents outside [0, 2] are physically unusual, not invalid.
    bool flagged() const noexcept { return y < 0.0 || y > 2.0; }
    bool outside_sanity_range() const noexcept { return y < -0.5 || y > 2.5; }
};

/// One plane-wave sample of the dispersion relation, convention exp(i(wt - kx)).
class DispersionPoint {
  public:
    DispersionPoint(double omega, std::complex<double> k) : omega_(omega), k_(k) {
        if (!(omega > 0.0) || !std::isfinite(omega)) {
            throw DomainError("omega must be positive and finite");
        }
    }
    double omega() const noexcept { return omega_; }
    std::complex<double> k() const noexcept { return k_; }
    /// Attenuation in nepers per unit length.
    double alpha() const noexcept { return -k_.imag() + 0.0; } // +0.0 folds -0 to 0

  private:
    double omega_;
    std::complex<double> k_;
};

/**
 * Reduce the lossy wave equation to its parabolic (FDWE) approximation by
 * dropping the Laplacian term and integrating in time:
 * beta = 2 - eta, lambda = s, kappa = c0^2 * gamma.
 */
inline FdweParams map_lossy_to_fdwe(const Medium& medium) {
    if (!(medium.eta() > 0.0 && medium.eta() < 2.0)) {
        throw DomainError("map_lossy_to_fdwe requires 0 < eta < 2 so that beta = 2 - eta "
                          "lies in (0, 2]");
    }
    if (medium.lossless()) {
        throw DomainError("map_lossy_to_fdwe requires gamma > 0 (kappa = c0^2 gamma must be "
                          "positive)");
    }
    return FdweParams(medium.s(), 2.0 - medium.eta(), medium.c0() * medium.c0() * medium.gamma());
}

/// Attenuation exponent implied by FDWE orders: y = lambda - beta + 1.
inline double exponent_from_fdwe(const FdweParams& params) noexcept {
    return params.lambda() - params.beta() + 1.0;
}

enum class Regime { SubDiffusion, SuperDiffusion, NormalDiffusion, NormalWave, Other };

inline std::string_view to_string(Regime r) noexcept {
    switch (r) {
    case Regime::SubDiffusion:
        return "sub-diffusion";
    case Regime::SuperDiffusion:
        return "super-diffusion";
    case Regime::NormalDiffusion:
        return "normal-diffusion";
    case Regime::NormalWave:
        return "normal-wave";
    case Regime::Other:
        return "other";
    }
    return "other";
}

struct BoundVerdict {
    bool satisfied;
    Regime regime;
    double implied_y;
};

/// Classify an FDWE order pair. Integer order comparisons are exact.
inline Regime classify_orders(double lambda, double beta) noexcept {
    if (lambda == 2.0 && beta == 2.0) {
        return Regime::NormalWave;
    }
    if (lambda == 2.0 && beta == 1.0) {
        return Regime::NormalDiffusion;
    }
    if (lambda == 2.0 && beta > 0.0 && beta < 1.0) {
        return Regime::SubDiffusion;
    }
    if ((lambda == 2.0 && beta > 1.0) || (lambda > 0.0 && lambda < 2.0 && beta == 1.0)) {
        return Regime::SuperDiffusion;
    }
    return Regime::Other;
}

/**
 * Evaluate the bound -1 <= lambda - beta <= 1. Accepts any real pair so
 * that counterexamples outside the FDWE range can be classified too.
 * `satisfied` is defined through implied_y in [0, 2], which keeps the two
 * views consistent under rounding.
 */
inline BoundVerdict check_order_bound(double lambda, double beta) noexcept {
    const double y = lambda - beta + 1.0;
    return {y >= 0.0 && y <= 2.0, classify_orders(lambda, beta), y};
}

} // namespace fracwave
