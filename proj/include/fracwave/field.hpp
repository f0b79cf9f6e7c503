#pragma once
/**
 * @file field.hpp
 * @brief Uniform periodic 1D grid, real fields on it, and solver trajectories.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fracwave/core.hpp"
#include "fracwave/errors.hpp"

namespace fracwave {

/// Uniform periodic grid x_i = i * dx on [0, length).
class Grid1D {
  public:
    Grid1D(std::size_t n, double length) : n_(n), length_(length) {
        if (n < 8 || (n & (n - 1)) != 0) {
            throw DomainError("grid size must be a power of two and at least 8");
        }
        if (!(length > 0.0) || !std::isfinite(length)) {
            throw DomainError("grid length must be positive and finite");
        }
    }

    std::size_t n() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double dx() const noexcept { return length_ / static_cast<double>(n_); }
    double x(std::size_t i) const noexcept { return static_cast<double>(i) * dx(); }

    /// Signed integer wavenumber index of transform slot j (0..n-1):
    /// 0, 1, ..., n/2-1, -n/2, ..., -1.
    long mode_index(std::size_t j) const noexcept {
        const auto nn = static_cast<long>(n_);
        const auto jj = static_cast<long>(j);
        return jj < nn / 2 ? jj : jj - nn;
    }

    /// Angular wavenumber of transform slot j.
    double wavenumber(std::size_t j) const noexcept {
        return 2.0 * pi * static_cast<double>(mode_index(j)) / length_;
    }

    /// Number of non-redundant modes of a real field (0..n/2).
    std::size_t half_modes() const noexcept { return n_ / 2 + 1; }

    /// |k| for half-spectrum slot j in 0..n/2 (slot n/2 is the Nyquist mode).
    double abs_wavenumber(std::size_t j) const noexcept {
        return 2.0 * pi * static_cast<double>(j) / length_;
    }

    friend bool operator==(const Grid1D&, const Grid1D&) = default;

  private:
    std::size_t n_;
    double length_;
};

/// Real field sampled on a Grid1D. Values are finite by construction.
class Field {
  public:
    Field(Grid1D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.n()) {
            throw ShapeError("field length does not match grid size");
        }
        for (double v : values_) {
            if (!std::isfinite(v)) {
                throw ValidationError("field contains non-finite values");
            }
        }
    }

    static Field zeros(Grid1D grid) { return Field(grid, std::vector<double>(grid.n(), 0.0)); }

    static Field sample(Grid1D grid, const std::function<double(double)>& f) {
        std::vector<double> v(grid.n());
        for (std::size_t i = 0; i < grid.n(); ++i) {
            v[i] = f(grid.x(i));
        }
        return Field(grid, std::move(v));
    }

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

    double l2_norm() const noexcept {
        double acc = 0.0;
        for (double v : values_) {
            acc += v * v;
        }
        return std::sqrt(acc * grid_.dx());
    }

    double max_abs() const noexcept {
        double m = 0.0;
        for (double v : values_) {
            m = std::max(m, std::abs(v));
        }
        return m;
    }

  private:
    Grid1D grid_;
    std::vector<double> values_;
};

struct Snapshot {
    double t;
    Field field;
};

/// Time-stamped fields from one solver run; times strictly increase.
class Trajectory {
  public:
    explicit Trajectory(double dt) : dt_(dt) {
        if (!(dt > 0.0) || !std::isfinite(dt)) {
            throw DomainError("trajectory dt must be positive");
        }
    }

    void push(double t, Field field) {
        if (!snapshots_.empty()) {
            if (!(t > snapshots_.back().t)) {
                throw DomainError("snapshot times must be strictly increasing");
            }
            if (!(field.grid() == snapshots_.front().field.grid())) {
                throw ShapeError("all snapshots must share one grid");
            }
        }
        snapshots_.push_back({t, std::move(field)});
    }

    double dt() const noexcept { return dt_; }
    std::span<const Snapshot> snapshots() const noexcept { return snapshots_; }
    std::size_t size() const noexcept { return snapshots_.size(); }
    bool empty() const noexcept { return snapshots_.empty(); }
    const Snapshot& front() const { return snapshots_.front(); }
    const Snapshot& back() const { return snapshots_.back(); }
    const Snapshot& operator[](std::size_t i) const { return snapshots_[i]; }
    const Grid1D& grid() const { return snapshots_.front().field.grid(); }

  private:
    double dt_;
    std::vector<Snapshot> snapshots_;
};

} // namespace fracwave
