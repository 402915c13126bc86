#pragma once

#include <stdexcept>
#include <string>

namespace ksadist {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad scalar grammar, schema violations, duplicate
/// projectors, unknown ids, backend mismatches between files.
struct InputError : Error {
    using Error::Error;
};

/// A documented operation precondition does not hold (dimension mismatch,
/// zero vector, invalid PVM, orthogonal pair where a non-orthogonal set is
/// required, ...).
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace ksadist
