#pragma once

#include <stdexcept>
#include <string>

namespace u22 {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation mixed values from different ring contexts / unknown variables.
struct RingMismatchError : Error {
    using Error::Error;
};

// A series coefficient beyond the tracked precision was requested, or a
// computation needs more precision than is available.
struct PrecisionError : Error {
    using Error::Error;
};

// A Groebner computation exceeded its step budget.
struct BudgetError : Error {
    using Error::Error;
};

// Invalid input data (bad parameters, failed invariants, schema violations).
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace u22
