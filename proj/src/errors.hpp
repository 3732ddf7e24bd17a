#pragma once

#include <stdexcept>
#include <string>

namespace ts {

// All engine failures are typed; callers that need to distinguish catch the
// concrete class, the CLI maps input-shaped ones to exit code 2 and the
// mathematical ones to exit code 1.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be understood at all: bad syntax, unknown symbol names,
// bidegree mismatches between declaration and use.
struct MalformedInput : Error {
    using Error::Error;
};

// A requested bidegree (or a product landing there) falls outside the ring's
// window and is not in a forced-zero region.  Always a hard stop: enlarging
// the window is the only fix, data is never truncated silently.
struct WindowOverflow : Error {
    using Error::Error;
};

// A generator was requested at negative twist.
struct NonEffectiveTwist : Error {
    using Error::Error;
};

// Two objects built over different rings were combined.
struct RingMismatch : Error {
    using Error::Error;
};

// A matrix handed in as a chain map fails the chain-map equation.
struct NotChainMap : Error {
    using Error::Error;
};

// Matrix shapes or generator counts disagree.
struct ShapeMismatch : Error {
    using Error::Error;
};

// The brute-force enumeration would exceed its candidate budget.
struct OracleTooLarge : Error {
    using Error::Error;
};

// An operation that enumerates field elements was asked to run over Q.
struct FieldNotFinite : Error {
    using Error::Error;
};

// A hypothesis of a recognition routine failed; `index` says which one.
struct ConditionFailed : Error {
    int index;
    ConditionFailed(int idx, const std::string& msg)
        : Error(msg), index(idx) {}
};

// A linear problem that must be solvable was not, or a solution that must be
// unique was not.
struct NoSolution : Error {
    using Error::Error;
};
struct NotUnique : Error {
    using Error::Error;
};

// builtin ring name lookup failed.
struct UnknownRing : Error {
    using Error::Error;
};

// make_polynomial_ring was given relations that collapse the unit.
struct InconsistentRelations : Error {
    using Error::Error;
};

}  // namespace ts
