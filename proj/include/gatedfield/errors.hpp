#pragma once

#include <stdexcept>

namespace gatedfield {

// Data-dependent numerical precondition failure discovered at run time
// (unresolved spectral tail, insufficient gate support, lattice mismatch, ...).
// Distinct from std::invalid_argument, which flags statically invalid
// parameters; the CLI maps the two to different exit codes.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gatedfield
