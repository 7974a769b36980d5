#pragma once

#include <stdexcept>
#include <string>

namespace omvar {

// Malformed input files or strings.  Maps to CLI exit code 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard (symbolic matrix size, complex size) tripped.
// Maps to CLI exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace omvar
