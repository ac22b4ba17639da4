#pragma once

#include <stdexcept>
#include <string>

namespace groth {

// Operands built over different variable universes.
struct UniverseMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A variable index that does not exist in the universe.
struct IndexOutOfUniverse : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// exact_div found a nonzero remainder.
struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Shape does not fit the evaluator (e.g. longer than n with nonzero overflow).
struct InvalidShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the range where an identity is asserted.
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace groth
