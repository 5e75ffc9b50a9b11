// tsvf.hpp
// Two-state-vector engine: weak values for pre/post-selected ensembles,
// their partially-post-selected generalization, and the closed forms for
// path projections under an arm-local spin rotation of strength alpha.

#pragma once

#include <utility>

#include "wvsim/hilbert.hpp"

namespace wvsim {

using WeakValue = Complex;

// Forward-evolving pre-selected state paired with the backward-evolving
// post-selected state.
struct TwoStateVector {
    JointState pre;
    JointState post;
};

// <post|A|pre> / <post|pre>. Throws DegeneratePostSelectionError when the
// overlap magnitude is at or below the degeneracy threshold.
WeakValue weak_value(const TwoStateVector& tsv, const Operator& a);

// <psi|P A|psi> / <psi|P|psi> for a post-selection projector P of any rank.
// Coincides with weak_value when P is rank one.
WeakValue generalized_weak_value(const JointState& psi, const Operator& post_projector,
                                 const Operator& a);

// Weak values of the two path projectors for pre-selection pi and
// post-selection pf; the pair always sums to 1.
std::pair<WeakValue, WeakValue> projection_weak_values(const PathState& pi, const PathState& pf);

// Weak value of the path-I projector when a spin rotation of angle alpha acts
// in `coupling_arm` before the symmetric post-selection. Closed form; equals
// projection_weak_values(pi, symmetric).first at alpha = 0 and acquires an
// O(alpha^2) dependence on the coupling otherwise.
WeakValue modified_projection_weak_value(const PathState& pi, double alpha, Arm coupling_arm);

// Ratio of the path-projector weak values at coupling strength alpha
// (coupling in arm II, symmetric post-selection). Converges to a/b only as
// alpha -> 0. Throws UndefinedRatioError for b = 0 or a vanishing denominator.
Complex weak_ratio(const PathState& pi, double alpha);

}  // namespace wvsim
