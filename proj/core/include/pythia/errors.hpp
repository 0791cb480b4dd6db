#pragma once

#include <stdexcept>
#include <string>

namespace pythia {

// Thrown when an argument violates an operation's domain (invalid
// parameters, broken invariants, rejected degenerate inputs).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an exact result would exceed the representable width.
// Arithmetic never wraps or saturates.
struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

}  // namespace pythia
