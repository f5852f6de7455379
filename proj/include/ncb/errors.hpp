#pragma once

#include <stdexcept>
#include <string>

namespace ncb {

// Thrown when an operation is asked for outside its domain of definition
// (e.g. the spectrum-freeness test on a noncommutative algebra).
struct UnsupportedAlgebraError : std::runtime_error {
    explicit UnsupportedAlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when no valid construction exists for the requested parameters
// (e.g. no conjugator realizes a torus covering action).
struct UnsupportedParametersError : std::runtime_error {
    explicit UnsupportedParametersError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when two independent computations of the same quantity disagree.
// This always signals broken input data or a bug, never a tolerance issue
// to be papered over.
struct InternalInconsistencyError : std::runtime_error {
    explicit InternalInconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ncb
