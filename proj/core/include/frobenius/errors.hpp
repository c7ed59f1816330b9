/**
 * @file errors.hpp
 * @brief Error hierarchy. All library failures derive from Error.
 */
#pragma once

#include <stdexcept>

namespace frobenius {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's stated domain.
struct DomainError : Error {
    using Error::Error;
};

/// The generators share a common factor > 1, so the gap set is infinite
/// and g, N are undefined.
struct InfiniteGapSet : Error {
    using Error::Error;
};

/// Neither orientation of a vector has exactly one positive and two
/// negative coordinates, so it cannot take part in a solution basis.
struct DegenerateVector : Error {
    using Error::Error;
};

/// The three candidate basic vectors fail a structural requirement
/// (e.g. two of them share the same positive coordinate).
struct InvalidSolutionBasis : Error {
    using Error::Error;
};

/// An internal cross-check failed. This always indicates a bug, never
/// bad user input.
struct InternalInconsistency : Error {
    using Error::Error;
};

/// A brute-force enumeration would exceed its configured safety limit.
struct LimitExceeded : Error {
    using Error::Error;
};

} // namespace frobenius
