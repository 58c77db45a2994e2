#pragma once

#include <stdexcept>
#include <string>

namespace bnconcur {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: expression syntax, bad file contents, out-of-range
/// indices, dimension caps. Maps to CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// Expression or file parse failure with source position.
struct ParseError : InputError {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : InputError(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

/// Exploration or enumeration exceeded its configured budget.
/// Maps to CLI exit code 3.
struct BudgetError : Error {
    using Error::Error;
};

/// A firing attempted to mark an already marked place, or a structural
/// safety precondition failed. Diagnostics name the offending places.
struct SafetyError : Error {
    using Error::Error;
};

} // namespace bnconcur
