#pragma once

#include <stdexcept>
#include <string>

namespace collatz {

// Input validation problems; the CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

struct NotMonotoneError : ValidationError {
    using ValidationError::ValidationError;
};

struct OutOfRangeError : ValidationError {
    using ValidationError::ValidationError;
};

// x0 does not realize the path's move sequence ("f is not defined").
struct DoesNotFollowError : ValidationError {
    using ValidationError::ValidationError;
};

struct NotCoprimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver result failed its internal simulation check. Never expected;
// signals an implementation bug. The CLI maps this to exit code 3.
struct VerificationFailedError : std::logic_error {
    using std::logic_error::logic_error;
};

// Certified interval comparison was inconclusive at the requested
// precision; the caller must raise precision_digits.
struct PrecisionInsufficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace collatz
