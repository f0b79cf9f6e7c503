#pragma once
/**
 * @file oracles.hpp
 * @brief Reference values computed by routes independent of the solvers:
 *        Gamma-function binomials, Mittag-Leffler series, and closed-form
 *        dispersion roots. Used only by tests and the verification suite.
 */

#include <cmath>
#include <complex>
#include <cstddef>

namespace fracwave::oracle {

/// (-1)^j binom(order, j) through Gamma functions (reflection for negative arguments).
inline double gl_weight_gamma(double order, std::size_t j) {
    const double jj = static_cast<double>(j);
    const double arg = order - jj + 1.0;
    // 1/Gamma has zeros at non-positive integers.
    if (arg <= 0.0 && std::floor(arg) == arg) {
        return 0.0;
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    // Gamma(arg) is negative only for some arg < 0; lgamma carries the magnitude.
    const double gamma_sign = std::tgamma(arg) < 0.0 ? -1.0 : 1.0;
    return sign * gamma_sign *
           std::exp(std::lgamma(order + 1.0) - std::lgamma(jj + 1.0) - std::lgamma(arg));
}

/// One-parameter Mittag-Leffler function E_a(z) by its power series.
inline double mittag_leffler(double a, double z, std::size_t max_terms = 400) {
    double sum = 0.0;
    double zpow = 1.0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        const double denom_log = std::lgamma(a * static_cast<double>(k) + 1.0);
        const double term = zpow * std::exp(-denom_log);
        sum += term;
        if (k > 5 && std::abs(term) < 1e-17 * std::abs(sum)) {
            break;
        }
        zpow *= z;
    }
    return sum;
}

/// Closed-form thermoviscous root (s = 2, eta = 1): k = (w/c0) / sqrt(1 + i gamma w).
inline std::complex<double> thermoviscous_root(double omega, double c0, double gamma) {
    return (omega / c0) / std::sqrt(std::complex<double>(1.0, gamma * omega));
}

/// Closed-form Telegrapher root (s = 0, eta = 1): k = sqrt(w^2/c0^2 - i gamma w).
inline std::complex<double> telegrapher_root(double omega, double c0, double gamma) {
    return std::sqrt(std::complex<double>(omega * omega / (c0 * c0), -gamma * omega));
}

/// SI prefactor hand-computed from the unit factors, for alpha0 in dB/cm/MHz^y.
inline double clinical_to_si_by_hand(double alpha0_db, double y) {
    const double np_per_db = 0.1151292546497022842; // ln(10)/20
    const double two_pi_mhz = 6283185.307179586477;  // 2*pi*1e6 rad/s
    return alpha0_db * np_per_db * 100.0 / std::pow(two_pi_mhz, y);
}

} // namespace fracwave::oracle
