#pragma once

#include <stdexcept>
#include <string>

namespace slimflow {

// Precondition / argument violations (caller bug).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Operation called in the wrong order (e.g. backward before forward).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed or truncated file. Message names the byte offset where parsing stopped.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite value encountered during numeric work (NaN loss, inf gradient).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace slimflow
