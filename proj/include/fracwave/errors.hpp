#pragma once
/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all fracwave modules.
 *
 * Every error derives from fracwave::Error so callers (the CLI in
 * particular) can map families of failures onto exit codes.
 */

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracwave {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value lies outside the admissible range of a parameter.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Fields or histories that must share a grid do not.
class ShapeError : public Error {
  public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// Non-finite numbers where finite ones are required.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class InsufficientDataError : public Error {
  public:
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

class MissingInitialConditionError : public Error {
  public:
    explicit MissingInitialConditionError(const std::string& msg) : Error(msg) {}
};

/// The requested parameter regime is analysable but not simulatable.
class UnsupportedRegimeError : public Error {
  public:
    explicit UnsupportedRegimeError(const std::string& msg) : Error(msg) {}
};

class InstabilityError : public Error {
  public:
    InstabilityError(const std::string& msg, std::size_t step)
        : Error(msg + " (step " + std::to_string(step) + ")"), step_(step) {}
    std::size_t step() const noexcept { return step_; }

  private:
    std::size_t step_;
};

/// Newton iteration on the dispersion relation failed to converge.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, double omega, std::complex<double> last_iterate,
                     double residual)
        : Error(msg), omega_(omega), last_(last_iterate), residual_(residual) {}
    double omega() const noexcept { return omega_; }
    std::complex<double> last_iterate() const noexcept { return last_; }
    double residual() const noexcept { return residual_; }

  private:
    double omega_;
    std::complex<double> last_;
    double residual_;
};

/// A root was found on the growing (non-attenuating) branch.
class BranchError : public Error {
  public:
    BranchError(const std::string& msg, double omega, std::complex<double> root)
        : Error(msg), omega_(omega), root_(root) {}
    double omega() const noexcept { return omega_; }
    std::complex<double> root() const noexcept { return root_; }

  private:
    double omega_;
    std::complex<double> root_;
};

/// Steady-state gate failed during attenuation measurement.
class TransientError : public Error {
  public:
    explicit TransientError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// A media entry lacks the prefactor needed for the requested conversion.
class IncompleteMediumError : public Error {
  public:
    explicit IncompleteMediumError(const std::string& msg) : Error(msg) {}
};

class NoAdmissibleMediumError : public Error {
  public:
    explicit NoAdmissibleMediumError(const std::string& msg) : Error(msg) {}
};

} // namespace fracwave
