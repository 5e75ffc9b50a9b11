// experiment.hpp
// One interferometer run: prepare the path state with spin up_x, rotate the
// spin in one arm by an arbitrary angle alpha, post-select on a path state,
// and keep the conditional spin of the surviving beam.

#pragma once

#include "wvsim/hilbert.hpp"

namespace wvsim {

struct CouplingConfig {
    Arm arm = Arm::II;
    double alpha = 0.0;  // radians
};

struct ExperimentOutput {
    SpinState conditional_spin;         // unit norm
    double success_probability = 0.0;   // |unnormalized spinor|^2
    Complex unnormalized_up{0.0, 0.0};
    Complex unnormalized_down{0.0, 0.0};
};

// pi (x) |up_x>.
JointState prepare(const PathState& pi);

// Unitary that rotates the spin inside the chosen arm:
//   |up_x>   ->  cos(alpha) |up_x> - i sin(alpha) |down_x>
//   |down_x> -> -i sin(alpha) |up_x> + cos(alpha) |down_x>
// and leaves the other arm untouched.
Operator spin_rotation(const CouplingConfig& cfg);

JointState couple(const JointState& s, const CouplingConfig& cfg);

// Projects onto pf on the path factor. Throws DegeneratePostSelectionError
// when the surviving weight is below the degeneracy threshold.
ExperimentOutput post_select(const JointState& s, const PathState& pf);

// post_select(couple(prepare(pi), cfg), pf).
ExperimentOutput run(const PathState& pi, const CouplingConfig& cfg, const PathState& pf);

}  // namespace wvsim
