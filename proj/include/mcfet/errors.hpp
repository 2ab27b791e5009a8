#pragma once

#include <stdexcept>

namespace mcfet {

// Numerical failure: quadrature that will not converge, an undefined
// capacity bracket, a non-normalizable density. Distinct from domain errors
// so the CLI can map it to its own exit code.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mcfet
