#pragma once

#include <stdexcept>
#include <string>

namespace hypercen {

// Base class for recoverable domain failures. The CLI maps these to exit
// code 2 and prints the machine-readable `error_code=...` line built from
// code() and detail().
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message, std::string detail = {})
        : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

// Raised when beta (or beta1*beta2) collides with 1/lambda for some
// eigenvalue lambda, making I - beta*A singular.
class PoleError : public DomainError {
public:
    PoleError(double beta, double eigenvalue, double distance);

    double beta() const noexcept { return beta_; }
    double eigenvalue() const noexcept { return eigenvalue_; }
    double distance() const noexcept { return distance_; }

private:
    double beta_;
    double eigenvalue_;
    double distance_;
};

// Raised when a series evaluation is requested outside its radius of
// convergence, |beta| >= 1/lambda_max.
class SeriesDivergenceError : public DomainError {
public:
    SeriesDivergenceError(double beta, double lambda_max);

    double beta() const noexcept { return beta_; }
    double lambda_max() const noexcept { return lambda_max_; }

private:
    double beta_;
    double lambda_max_;
};

// Raised when an operation needs a nonzero spectrum (e.g. the Perron vector
// of an all-zero matrix).
class ZeroSpectrumError : public DomainError {
public:
    explicit ZeroSpectrumError(const std::string& message)
        : DomainError("ZERO_SPECTRUM", message) {}
};

// File or format failure; location is a human-readable position such as
// "edges[2].members[0].w" or "line 14".
class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::string location = {})
        : DomainError("PARSE", location.empty() ? message : message + " (at " + location + ")",
                      location),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

class IoError : public DomainError {
public:
    explicit IoError(const std::string& message) : DomainError("IO", message) {}
};

} // namespace hypercen
