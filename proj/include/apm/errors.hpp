#pragma once

#include <stdexcept>
#include <string>

namespace apm {

/// Input outside the domain of a model equation (negative stretch, infeasible arc, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A bracketed root search whose endpoints do not straddle a sign change.
struct UnbracketedRootError : DomainError {
    using DomainError::DomainError;
};

/// Malformed or incomplete input data (config files, CSV curves, trial records).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace apm
