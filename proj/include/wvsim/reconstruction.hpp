// reconstruction.hpp
// Path-state estimators working from the spin tomography of the post-selected
// beam: the weak-regime pointer-angle estimator (biased at O(alpha^2)) and the
// exact strong-coupling inversion, plus the ratio-bias sweep that quantifies
// how the finite-coupling weak values drift away from a/b.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wvsim/hilbert.hpp"
#include "wvsim/tomography.hpp"
#include "wvsim/tsvf.hpp"

namespace wvsim {

enum class Method { Weak, Strong };

struct ReconstructionReport {
    PathState estimated;
    Method method = Method::Weak;
    double alpha = 0.0;
    std::optional<double> fidelity_vs_truth;
    std::string inputs_digest;
};

struct BiasRow {
    double alpha = 0.0;
    Complex measured_ratio{0.0, 0.0};
    Complex true_ratio{0.0, 0.0};
    double abs_deviation = 0.0;
};

// Pointer-angle readout: theta_xy/(2 alpha) + i theta_xz/(2 alpha), the
// estimate of the path-I projection weak value for a coupling in arm I.
WeakValue weak_estimate(const RotationAngles& angles, double alpha);

// Inverts w = a/(a+b): amplitudes proportional to (w, 1-w), normalized and in
// canonical phase. w = 0 and w = 1 map to (0,1) and (1,0).
PathState state_from_weak_value(WeakValue w);

// Exact inversion of the strong-coupling run (symmetric post-selection): the
// Bloch vector and success probability of the conditional spin determine the
// unnormalized spinor, from which both path amplitudes follow. Throws
// NonInvertibleCouplingError at sin(alpha) ~ 0 and
// DegeneratePostSelectionError at p ~ 0.
PathState strong_estimate(const BlochVector& b, double success_probability, double alpha,
                          Arm arm);

// weak_ratio(pi, alpha) against the true a/b, per alpha, in input order.
std::vector<BiasRow> bias_sweep(const PathState& pi, const std::vector<double>& alphas);

// |<p|q>|^2; insensitive to global phase.
double fidelity(const PathState& p, const PathState& q);

// Canonical ray representative: a real >= 0, or b real >= 0 when |a| ~ 0.
PathState canonical_phase(const PathState& p);

}  // namespace wvsim
