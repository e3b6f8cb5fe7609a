#pragma once

#include <stdexcept>
#include <string>

namespace corotan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// det F at or below the invertibility threshold.
struct NonInvertible : Error {
    using Error::Error;
};

/// Input expected to be symmetric positive definite is not.
struct NotSPD : Error {
    using Error::Error;
};

/// Incompressible law called with det F != 1.
struct NotIsochoric : Error {
    using Error::Error;
};

/// Green-Naghdi rate requested without a polar spin.
struct MissingSpin : Error {
    using Error::Error;
};

/// Mandel conversion of a tensor that lacks a minor symmetry.
struct NotMinorSymmetric : Error {
    using Error::Error;
};

/// A tangent construction received a non-symmetric stress.
struct InputAsymmetric : Error {
    using Error::Error;
};

/// Integration step hit a state with det F <= 0.
struct StepRejected : Error {
    using Error::Error;
};

/// Bad run configuration (CLI / JSON input).
struct ConfigError : Error {
    using Error::Error;
};

/// Operation not defined for this model.
struct UnsupportedOperation : Error {
    using Error::Error;
};

} // namespace corotan
