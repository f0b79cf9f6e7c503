#pragma once
/**
 * @file fracops.hpp
 * @brief Discrete fractional operators: Grunwald-Letnikov time-derivative
 *        weights and the spectral fractional Laplacian on a periodic grid.
 *
 * The GL derivative of order a at t_n is
 *
 *   D^a f(t_n) ~ dt^{-a} * sum_{j=0}^{n} w_j f(t_{n-j}),
 *   w_0 = 1,  w_j = w_{j-1} (1 - (a + 1) / j),
 *
 * with values before the first history entry taken as zero (quiescent
 * past). The full history is used, so an N-step run costs O(N^2) per mode.
 *
 * The fractional Laplacian (-Laplacian)^{lambda/2} is the Fourier
 * multiplier |k|^lambda.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fracwave/errors.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/field.hpp"

namespace fracwave {

class GlWeights {
  public:
    GlWeights(double order, std::vector<double> weights)
        : order_(order), weights_(std::move(weights)) {
        // Integer orders give exact trailing zeros; convolutions can stop early.
        active_ = weights_.size();
        while (active_ > 1 && weights_[active_ - 1] == 0.0) {
            --active_;
        }
    }

    double order() const noexcept { return order_; }
    std::span<const double> weights() const noexcept { return weights_; }
    double operator[](std::size_t j) const noexcept { return weights_[j]; }
    std::size_t size() const noexcept { return weights_.size(); }
    /// One past the last non-zero weight.
    std::size_t active_size() const noexcept { return active_; }

  private:
    double order_;
    std::vector<double> weights_;
    std::size_t active_;
};

/// Weights w_0..w_n for a GL derivative of the given order, in [0, 3).
inline GlWeights gl_weights(double order, std::size_t n) {
    if (n < 1) {
        throw DomainError("gl_weights requires n >= 1");
    }
    if (!(order >= 0.0 && order < 3.0)) {
        throw DomainError("gl_weights requires 0 <= order < 3");
    }
    std::vector<double> w(n + 1);
    w[0] = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
        w[j] = w[j - 1] * (1.0 - (order + 1.0) / static_cast<double>(j));
    }
    return GlWeights(order, std::move(w));
}

/**
 * GL derivative at the newest history entry. `history` is ordered oldest
 * first; entries before history[0] are treated as zero.
 */
inline Field gl_fractional_derivative(std::span<const Field> history, double order, double dt) {
    if (history.empty()) {
        throw DomainError("gl_fractional_derivative requires a non-empty history");
    }
    if (!(dt > 0.0)) {
        throw DomainError("dt must be positive");
    }
    const Grid1D& grid = history.front().grid();
    for (const Field& f : history) {
        if (!(f.grid() == grid)) {
            throw ShapeError("history fields must share one grid");
        }
    }
    const std::size_t m = history.size();
    const GlWeights w = gl_weights(order, m);
    std::vector<double> out(grid.n(), 0.0);
    const std::size_t terms = std::min(m, w.active_size());
    for (std::size_t j = 0; j < terms; ++j) {
        const auto vals = history[m - 1 - j].values();
        for (std::size_t i = 0; i < grid.n(); ++i) {
            out[i] += w[j] * vals[i];
        }
    }
    const double scale = std::pow(dt, -order);
    for (double& v : out) {
        v *= scale;
    }
    return Field(grid, std::move(out));
}

/**
 * |k_j|^p for every transform slot j (full ordering, length n). p = 0
 * gives the identity (0^0 = 1); for p > 0 the zero mode maps to 0.
 * Exponents up to 4 are allowed so that products of two Laplacian symbols
 * can be represented.
 */
inline std::vector<double> wavenumber_power(double p, const Grid1D& grid) {
    if (!(p >= 0.0 && p <= 4.0)) {
        throw DomainError("wavenumber exponent must lie in [0, 4]");
    }
    std::vector<double> out(grid.n());
    for (std::size_t j = 0; j < grid.n(); ++j) {
        const double k = std::abs(grid.wavenumber(j));
        if (p == 0.0) {
            out[j] = 1.0;
        } else if (p == 2.0) {
            out[j] = k * k;
        } else {
            out[j] = std::pow(k, p);
        }
    }
    return out;
}

/// Fourier multipliers of (-Laplacian)^{lambda/2}, lambda in [0, 2].
inline std::vector<double> fractional_laplacian_symbol(double lambda, const Grid1D& grid) {
    if (!(lambda >= 0.0 && lambda <= 2.0)) {
        throw DomainError("lambda must satisfy 0 <= lambda <= 2");
    }
    return wavenumber_power(lambda, grid);
}

namespace detail {

/// |k|^p on the half spectrum (slots 0..n/2), same conventions as wavenumber_power.
inline std::vector<double> half_spectrum_power(double p, const Grid1D& grid) {
    std::vector<double> out(grid.half_modes());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double k = grid.abs_wavenumber(j);
        if (p == 0.0) {
            out[j] = 1.0;
        } else if (p == 2.0) {
            out[j] = k * k;
        } else {
            out[j] = std::pow(k, p);
        }
    }
    return out;
}

} // namespace detail

/// Apply (-Laplacian)^{lambda/2} spectrally.
inline Field apply_fractional_laplacian(const Field& f, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 2.0)) {
        throw DomainError("lambda must satisfy 0 <= lambda <= 2");
    }
    const Grid1D& grid = f.grid();
    RealFft fft(grid.n());
    auto spec = fft.forward(f.values());
    const auto symbol = detail::half_spectrum_power(lambda, grid);
    for (std::size_t j = 0; j < spec.size(); ++j) {
        spec[j] *= symbol[j];
    }
    return Field(grid, fft.inverse(spec));
}

} // namespace fracwave
