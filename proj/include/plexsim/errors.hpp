// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace plexsim {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed physical description (bad truncation, negative rate, dimension mismatch).
class SpecError : public Error {
public:
    explicit SpecError(const std::string& what) : Error(what) {}
};

// Linear-algebra failures: non-convergence, degenerate stationary manifold,
// step-size violations, trace drift.
class SolverError : public Error {
public:
    explicit SolverError(const std::string& what) : Error(what) {}
};

// Correlation requested on a state with vanishing mean photon number.
class UndefinedCorrelationError : public Error {
public:
    explicit UndefinedCorrelationError(const std::string& what) : Error(what) {}
};

// Perturbative closed forms hit a (near-)singular denominator or system.
class SingularParameterError : public Error {
public:
    explicit SingularParameterError(const std::string& what) : Error(what) {}
};

// Configuration ingestion failures; `path` points at the offending field.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& path, const std::string& what)
        : Error(path.empty() ? what : path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace plexsim
