#pragma once

#include <stdexcept>
#include <string>

namespace gctri {

/// Malformed or inconsistent input (wrong arity, bad file, length mismatch).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested table or matrix would exceed the desk-scale limits.
class SizeLimitError : public InputError {
public:
    using InputError::InputError;
};

/// A structural claim of the reduction did not hold. Reaching this is a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gctri
