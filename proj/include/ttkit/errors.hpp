#pragma once

#include <stdexcept>

namespace ttkit {

/// Thrown when operands disagree in shape, a mode or site argument is out of
/// range, or a structural precondition fails.  Messages name the offending
/// mode or bond.
class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation would exceed an element-count, memory, or work
/// budget.  Raised before the offending allocation is attempted.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed or truncated files and on stream failures.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ttkit
