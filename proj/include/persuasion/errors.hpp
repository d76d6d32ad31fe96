#pragma once

#include <stdexcept>
#include <string>

namespace persuasion {

/// Base class for all domain errors thrown by this library.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A message with zero marginal probability was updated on; the caller must
/// supply an off-path belief instead.
struct ZeroProbabilityMessage : DomainError {
    using DomainError::DomainError;
};

/// pi(theta) > 0 for a state where pi0(theta) == 0.
struct NotAbsolutelyContinuous : DomainError {
    using DomainError::DomainError;
};

struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

struct MissingStateValues : DomainError {
    using DomainError::DomainError;
};

/// Subset enumeration over the state space would exceed the supported size.
struct StateSpaceTooLarge : DomainError {
    using DomainError::DomainError;
};

struct DegeneratePrior : DomainError {
    using DomainError::DomainError;
};

struct NonBinaryStateSpace : DomainError {
    using DomainError::DomainError;
};

/// The game does not declare a per-receiver sender utility.
struct NonSeparableGame : DomainError {
    using DomainError::DomainError;
};

struct NotAttainable : DomainError {
    using DomainError::DomainError;
};

struct AudienceMismatch : DomainError {
    using DomainError::DomainError;
};

struct LengthMismatch : DomainError {
    using DomainError::DomainError;
};

struct InvalidParams : DomainError {
    using DomainError::DomainError;
};

struct IncentiveCheckFailed : DomainError {
    using DomainError::DomainError;
};

struct ConfigError : DomainError {
    using DomainError::DomainError;
};

}  // namespace persuasion
