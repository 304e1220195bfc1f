#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

// Precondition violations: bad flags, out-of-range parameters, unknown tags.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A pair set that is not the inversion set of any permutation.
struct NotBiclosedError : std::domain_error {
    using std::domain_error::domain_error;
};

// exact_divide called with a divisor that leaves a remainder.
struct NonExactDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Search budget (nodes, wall clock, or instance size cap) exhausted.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bruhat
