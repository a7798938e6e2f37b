#pragma once

#include <stdexcept>
#include <string>

namespace cyclekit {

// Error taxonomy; the CLI maps these onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched ambient variable counts.
struct DimensionError : Error {
    using Error::Error;
};

// Violated mathematical precondition (improper ideal, non-minimal prime, ...).
struct DomainError : Error {
    using Error::Error;
};

// Levels or ranks do not match in a composition.
struct CompositionError : Error {
    using Error::Error;
};

// A supplied map fails its chain-map / commutation contract.
struct ContractViolation : Error {
    using Error::Error;
};

// A strand-local linear system has no solution (complex not exact where required).
struct ResolutionDefect : Error {
    using Error::Error;
};

// Input exceeds the supported desk-scale bounds.
struct ResourceError : Error {
    using Error::Error;
};

// Two routes that must agree exactly disagreed.
struct InternalConsistencyError : Error {
    using Error::Error;
};

// Malformed textual input; carries a position.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace cyclekit
