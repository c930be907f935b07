#pragma once

#include <stdexcept>
#include <string>

namespace kempe {

// Caller handed us something that violates a documented precondition
// (malformed file, not an edge, palette mismatch, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The input graph is outside the class a procedure is valid for
// (neither triangle-free nor chordless on the relevant subgraph).
struct ClassViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal claim the recoloring procedures rely on did not hold.
// Either a bug or an out-of-class instance that slipped past the checks.
struct InvariantBreachError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trace replay failed; `step` is the first offending record.
struct TraceError : std::runtime_error {
    int step;
    TraceError(int step_, const std::string& msg)
        : std::runtime_error(msg), step(step_) {}
};

// Enumeration rejected because the search space exceeds the cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kempe
