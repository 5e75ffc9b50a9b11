// errors.hpp
// Typed domain errors. Weak values and conditional states are undefined at
// (near-)orthogonal post-selection; reporting that as a typed error keeps
// Inf/NaN out of downstream sweeps.

#pragma once

#include <stdexcept>

namespace wvsim {

// Post-selection weight (or pre/post overlap) below the degeneracy threshold.
struct DegeneratePostSelectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ratio of projection weak values requested where it does not exist (b = 0 or
// vanishing denominator).
struct UndefinedRatioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strong-coupling inversion requested at sin(alpha) ~ 0, where the coupling
// leaves no spin signal to invert.
struct NonInvertibleCouplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bloch projection too short to define an angle.
struct DegenerateAngleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wvsim
