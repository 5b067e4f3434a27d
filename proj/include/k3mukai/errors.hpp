#pragma once

#include <stdexcept>
#include <string>

namespace k3mukai {

// Base for every error raised by library operations. The CLI maps these to
// exit code 3; malformed input documents raise ParseError (exit code 2).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : DomainError {
    using DomainError::DomainError;
};

// A value asserted to lie in Q (or Z) failed the check; signals invalid
// input data rather than a computation fault.
struct NotRational : DomainError {
    using DomainError::DomainError;
};

struct NotIntegral : DomainError {
    using DomainError::DomainError;
};

struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

struct ConductorOverflow : DomainError {
    using DomainError::DomainError;
};

// A lattice action generator is not an isometry of the Gram form or is not
// invertible over the integers.
struct InvalidAction : DomainError {
    using DomainError::DomainError;
};

struct InvalidSurface : DomainError {
    using DomainError::DomainError;
};

// Mukai vector with non-integral s component.
struct NonIntegralMukai : DomainError {
    using DomainError::DomainError;
};

struct ZeroPolynomial : DomainError {
    using DomainError::DomainError;
};

struct InvalidGroupData : DomainError {
    using DomainError::DomainError;
};

struct InvalidCounts : DomainError {
    using DomainError::DomainError;
};

struct UnsolvableOrder : DomainError {
    using DomainError::DomainError;
};

struct OddDimension : DomainError {
    using DomainError::DomainError;
};

struct NegativeDimension : DomainError {
    using DomainError::DomainError;
};

struct NotStabilityValue : DomainError {
    using DomainError::DomainError;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace k3mukai
