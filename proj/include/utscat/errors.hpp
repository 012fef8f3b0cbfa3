#pragma once

#include <stdexcept>
#include <string>

namespace utscat {

// Geometry construction failures.
struct DegenerateSideError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotConvexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WrongOrientationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Special-function domain failures.
struct OrderTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonPositiveArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OriginSingularError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Contour quadrature failures.
struct NoDecayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleOnRayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleAtOriginError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TwoPolesOnRayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CornerDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// System assembly / solve failures.
struct AssemblyNonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace utscat
