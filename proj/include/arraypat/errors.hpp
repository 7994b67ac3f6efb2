#pragma once

#include <stdexcept>
#include <string>

namespace arraypat {

// Base of everything thrown by this library.
class error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (grids, patterns, substitutions, fragments).
class format_error : public error {
    using error::error;
};

// Subgrid request outside the host grid.
class range_error : public error {
    using error::error;
};

// A cell falls outside the alphabet an operation expects, or a projection
// map leaves a token unmapped.
class domain_error : public error {
    using error::error;
};

// An enumeration guard tripped (search space or set-partition ceiling).
class capacity_error : public error {
    using error::error;
};

// Requested a construction that provably has no correct result
// (e.g. concatenation in a direction the mode is not closed under).
class unsupported_error : public error {
    using error::error;
};

// Violated operation precondition: non-uniform substitution where a
// morphism is required, incomplete substitution, empty image.
class precondition_error : public error {
    using error::error;
};

// Incompatible fragments combined (different bounds or alphabets).
class config_error : public error {
    using error::error;
};

// Bad invocation of a named facility (unknown refutation case, ...).
class usage_error : public error {
    using error::error;
};

} // namespace arraypat
