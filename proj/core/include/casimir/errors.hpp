#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument value (outside the mathematical domain of an operation).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Requested order exceeds the supported cap.
class OrderOverflowError : public Error {
public:
    explicit OrderOverflowError(const std::string& what) : Error(what) {}
};

/// A material model is missing required parameters or carries invalid ones.
class ModelParameterError : public Error {
public:
    explicit ModelParameterError(const std::string& what) : Error(what) {}
};

/// No closed-form result is available for the requested material model.
class UnsupportedModelError : public Error {
public:
    explicit UnsupportedModelError(const std::string& what) : Error(what) {}
};

/// det(1 - M) came out non-positive; indicates a truncation or scaling fault.
class NonPositiveDeterminantError : public Error {
public:
    explicit NonPositiveDeterminantError(const std::string& what) : Error(what) {}
};

/// An iterative refinement (l_max growth, quadrature, Matsubara sum) stalled.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& what) : Error(what) {}
};

/// Matrix entries could not be brought into normal floating-point range.
class ScalingOverflowError : public Error {
public:
    explicit ScalingOverflowError(const std::string& what) : Error(what) {}
};

/// The polynomial fit system is too ill-conditioned to trust.
class FitIllConditionedError : public Error {
public:
    explicit FitIllConditionedError(const std::string& what) : Error(what) {}
};

}  // namespace casimir
