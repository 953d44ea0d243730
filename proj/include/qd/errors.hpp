#pragma once

#include <stdexcept>
#include <string>

namespace qd {

// Region rows violate the layer overlap condition (z >= w at some junction).
struct ConditionSViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loop not simple, interior not layer-decomposable, transversal chain broken, ...
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary data admits no admissible extension (holonomy mismatch).
struct NoCompletionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configuration fails a flatness constraint where one is required.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path visits an edge the configuration does not label.
struct IncompleteConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// compose() endpoints do not match.
struct InvalidCompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive loop would exceed the caller's raw-state budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qd
