#include "wvsim/tsvf.hpp"

#include <cmath>
#include <stdexcept>

namespace wvsim {

WeakValue weak_value(const TwoStateVector& tsv, const Operator& a) {
    const Complex den = inner(tsv.post, tsv.pre);
    if (std::abs(den) <= kDegeneracyThreshold) {
        throw DegeneratePostSelectionError(
            "weak value undefined: pre- and post-selected states are orthogonal");
    }
    const Complex num = inner(tsv.post, apply_operator(a, tsv.pre));
    return num / den;
}

WeakValue generalized_weak_value(const JointState& psi, const Operator& post_projector,
                                 const Operator& a) {
    const Complex den = inner(psi, apply_operator(post_projector, psi));
    if (std::abs(den) <= kDegeneracyThreshold) {
        throw DegeneratePostSelectionError(
            "generalized weak value undefined: post-selection weight vanishes");
    }
    const JointState projected = apply_operator(post_projector, apply_operator(a, psi));
    return inner(psi, projected) / den;
}

std::pair<WeakValue, WeakValue> projection_weak_values(const PathState& pi, const PathState& pf) {
    const Complex term_i = std::conj(pf.a) * pi.a;
    const Complex term_ii = std::conj(pf.b) * pi.b;
    const Complex den = term_i + term_ii;
    if (std::abs(den) <= kDegeneracyThreshold) {
        throw DegeneratePostSelectionError(
            "projection weak values undefined: <pf|pi> vanishes");
    }
    return {term_i / den, term_ii / den};
}

namespace {

// Weak value of the path-I projector with the rotation in arm II:
//   a (b* cos(alpha) + a*) / (b (a* cos(alpha) + b*) + a (b* cos(alpha) + a*)).
// The denominator is twice the post-selection weight, hence real.
WeakValue arm_two_closed_form(Complex a, Complex b, double cos_alpha) {
    const Complex num = a * (std::conj(b) * cos_alpha + std::conj(a));
    const Complex den = b * (std::conj(a) * cos_alpha + std::conj(b)) + num;
    if (std::abs(den) <= kDegeneracyThreshold) {
        throw DegeneratePostSelectionError(
            "modified projection weak value undefined: post-selection weight vanishes");
    }
    return num / den;
}

}  // namespace

WeakValue modified_projection_weak_value(const PathState& pi, double alpha, Arm coupling_arm) {
    const double c = std::cos(alpha);
    if (coupling_arm == Arm::II) {
        return arm_two_closed_form(pi.a, pi.b, c);
    }
    // Relabeling the paths maps a coupling in arm I onto the arm-II form with
    // a and b swapped; the path-I projector becomes 1 minus that value.
    return Complex{1.0, 0.0} - arm_two_closed_form(pi.b, pi.a, c);
}

Complex weak_ratio(const PathState& pi, double alpha) {
    if (std::abs(pi.b) <= kDegeneracyThreshold) {
        throw UndefinedRatioError("weak-value ratio undefined for b = 0");
    }
    const double c = std::cos(alpha);
    const Complex num = pi.a * (std::conj(pi.b) * c + std::conj(pi.a));
    const Complex den = pi.b * (std::conj(pi.a) * c + std::conj(pi.b));
    if (std::abs(den) <= kDegeneracyThreshold) {
        throw UndefinedRatioError("weak-value ratio undefined: denominator vanishes");
    }
    return num / den;
}

}  // namespace wvsim
