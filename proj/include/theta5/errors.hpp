#pragma once

#include <stdexcept>
#include <string>

namespace theta5 {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coincident or duplicate points, invalid cone counts, and similar input defects.
struct DegenerateInputError : Error {
    using Error::Error;
};

// A point file line that cannot be parsed. Line and column are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg), line(line_), column(column_) {}
    int line;
    int column;
};

// The spanning-path case classifier found no applicable case. The proof shows
// the cases are exhaustive, so this signals a degeneracy or tolerance failure.
struct ExhaustivenessError : Error {
    using Error::Error;
};

// Spanning-path recursion failed its induction measure or depth cap.
struct ConstructionFailureError : Error {
    using Error::Error;
};

// A lower-bound construction step failed its shortest-path checkpoint.
struct ConstructionValidationError : Error {
    ConstructionValidationError(const std::string& msg, int step_)
        : Error(msg), step(step_) {}
    int step;
};

// The routing adversary failed to preserve a previous cycle's routing choices.
struct AdversaryValidationError : Error {
    AdversaryValidationError(const std::string& msg, int cycle_)
        : Error(msg), cycle(cycle_) {}
    int cycle;
};

// A graph invariant that construction should have guaranteed does not hold.
struct GraphIntegrityError : Error {
    using Error::Error;
};

}  // namespace theta5
