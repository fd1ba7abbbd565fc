#pragma once

#include <stdexcept>
#include <string>

namespace bn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad arguments, wrong ring,
// out-of-range query). Maps to CLI exit code 1.
struct UsageError : Error {
    using Error::Error;
};

struct RingMismatchError : UsageError {
    using UsageError::UsageError;
};

// A mathematical invariant the engine relies on failed (non-exact division,
// integrality violation, square-root contamination). Always a bug or a
// falsified identity, never user error. Maps to CLI exit code 2.
struct InternalCheckError : Error {
    using Error::Error;
};

// A pluggable engine was queried before being configured.
struct EngineNotConfiguredError : UsageError {
    using UsageError::UsageError;
};

}  // namespace bn
