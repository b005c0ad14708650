#pragma once

#include <stdexcept>

namespace setpair {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the operation's documented range.
struct RangeError : Error {
    using Error::Error;
};

// Structural precondition violated (sizes, kinds, orderings, thresholds).
struct PreconditionError : Error {
    using Error::Error;
};

// Wedge grade exceeds the ambient dimension.
struct GradeError : Error {
    using Error::Error;
};

// Malformed JSON input; the message names the offending field.
struct ParseError : Error {
    using Error::Error;
};

// Seeded general-position sampling exhausted its attempt budget.
struct ResampleError : Error {
    using Error::Error;
};

// A proved invariant failed at runtime; indicates a bug or an instance
// that does not satisfy the hypotheses it claimed to.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace setpair
