#pragma once
/**
 * @file fft.hpp
 * @brief Thin RAII wrapper over FFTW real-to-complex transforms.
 *
 * Convention: forward is unnormalized, sum_j u_j exp(-i k x_j); inverse
 * divides by n. Only the n/2 + 1 non-redundant modes are stored.
 */

#include <complex>
#include <cstddef>
#include <mutex>
#include <span>
#include <vector>

#include <fftw3.h>

namespace fracwave {

namespace detail {
// The FFTW planner is not re-entrant.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace detail

class RealFft {
  public:
    explicit RealFft(std::size_t n)
        : n_(n), real_(fftw_alloc_real(n)), spec_(fftw_alloc_complex(n / 2 + 1)) {
        std::lock_guard lock(detail::fftw_planner_mutex());
        const int ni = static_cast<int>(n);
        forward_ = fftw_plan_dft_r2c_1d(ni, real_, spec_, FFTW_ESTIMATE);
        inverse_ = fftw_plan_dft_c2r_1d(ni, spec_, real_, FFTW_ESTIMATE);
    }

    ~RealFft() {
        std::lock_guard lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(inverse_);
        fftw_free(real_);
        fftw_free(spec_);
    }

    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t size() const noexcept { return n_; }
    std::size_t modes() const noexcept { return n_ / 2 + 1; }

    void forward(std::span<const double> in, std::span<std::complex<double>> out) {
        for (std::size_t i = 0; i < n_; ++i) {
            real_[i] = in[i];
        }
        fftw_execute(forward_);
        for (std::size_t j = 0; j < modes(); ++j) {
            out[j] = {spec_[j][0], spec_[j][1]};
        }
    }

    std::vector<std::complex<double>> forward(std::span<const double> in) {
        std::vector<std::complex<double>> out(modes());
        forward(in, out);
        return out;
    }

    /// Inverse transform including the 1/n normalization. The imaginary
    /// parts of the DC and Nyquist slots are ignored.
    void inverse(std::span<const std::complex<double>> in, std::span<double> out) {
        for (std::size_t j = 0; j < modes(); ++j) {
            spec_[j][0] = in[j].real();
            spec_[j][1] = in[j].imag();
        }
        fftw_execute(inverse_);
        const double scale = 1.0 / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = real_[i] * scale;
        }
    }

    std::vector<double> inverse(std::span<const std::complex<double>> in) {
        std::vector<double> out(n_);
        inverse(in, out);
        return out;
    }

  private:
    std::size_t n_;
    double* real_;
    fftw_complex* spec_;
    fftw_plan forward_ = nullptr;
    fftw_plan inverse_ = nullptr;
};

} // namespace fracwave
