#pragma once

#include <stdexcept>
#include <string>

namespace deltaspec {

/// Invalid or inconsistent experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested realization is not invertible/positive for the given
/// parameters (CLI exit code 3).
class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Loss of accuracy, non-convergence or range errors in a numerical
/// kernel (CLI exit code 4).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Result magnitude not representable in double; the message names the
/// scaled variant to use instead.
class OverflowError : public NumericalError {
public:
    explicit OverflowError(const std::string& what) : NumericalError(what) {}
};

} // namespace deltaspec
