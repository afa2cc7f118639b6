#pragma once

#include <stdexcept>
#include <string>

namespace jlx {

// Invalid parameter combinations (n <= 2s, nonpositive arguments, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Base for failures of the numeric machinery itself.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root solver could not establish a sign change.
struct BracketError : NumericalError {
    using NumericalError::NumericalError;
};

// An integer scan ran past its hard cap without settling.
struct CapError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace jlx
