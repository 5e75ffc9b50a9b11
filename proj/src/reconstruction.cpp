#include "wvsim/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wvsim {

WeakValue weak_estimate(const RotationAngles& angles, double alpha) {
    if (!std::isfinite(alpha) || std::abs(alpha) <= 1e-12) {
        throw std::invalid_argument("weak estimate needs a nonzero coupling angle");
    }
    return Complex{angles.theta_xy, angles.theta_xz} / (2.0 * alpha);
}

PathState state_from_weak_value(WeakValue w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw std::invalid_argument("weak value must be finite");
    }
    if (std::abs(w) <= 1e-12) {
        return {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    }
    if (std::abs(w - Complex{1.0, 0.0}) <= 1e-12) {
        return {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    }
    return canonical_phase(make_path_state(w, Complex{1.0, 0.0} - w));
}

PathState strong_estimate(const BlochVector& b, double success_probability, double alpha,
                          Arm arm) {
    const double sin_alpha = std::sin(alpha);
    if (!std::isfinite(alpha) || std::abs(sin_alpha) <= 1e-9) {
        throw NonInvertibleCouplingError(
            "strong inversion undefined at sin(alpha) ~ 0: no spin signal to invert");
    }
    if (!(success_probability > kDegeneracyThreshold)) {
        throw DegeneratePostSelectionError(
            "strong inversion undefined: post-selection weight vanishes");
    }
    // Unnormalized conditional spinor (u, d) from the Bloch vector and the
    // overall weight: |u|^2 = p(1+sx)/2, |d|^2 = p(1-sx)/2, u* d = p(sz - i sy)/2.
    // The spinor's global phase is unobservable; fix u real >= 0 (d real >= 0
    // when u vanishes) and absorb the remainder in the final phase convention.
    const double p = success_probability;
    const double u2 = std::max(0.0, p * (1.0 + b.sx) / 2.0);
    const double d2 = std::max(0.0, p * (1.0 - b.sx) / 2.0);
    const Complex ud = 0.5 * p * Complex{b.sz, -b.sy};
    Complex u, d;
    if (u2 >= kDegeneracyThreshold) {
        u = std::sqrt(u2);
        d = ud / u.real();
    } else {
        d = std::sqrt(d2);
        u = d.real() > 0.0 ? std::conj(ud) / d.real() : Complex{0.0, 0.0};
    }
    // Undo the symmetric post-selection and the arm-local rotation:
    // coupled arm amplitude from d, uncoupled arm amplitude from u.
    const double rt2 = std::sqrt(2.0);
    const Complex coupled = Complex{0.0, 1.0} * rt2 * d / sin_alpha;
    const Complex uncoupled = rt2 * u - coupled * std::cos(alpha);
    const Complex a_amp = (arm == Arm::II) ? uncoupled : coupled;
    const Complex b_amp = (arm == Arm::II) ? coupled : uncoupled;
    return canonical_phase(make_path_state(a_amp, b_amp));
}

std::vector<BiasRow> bias_sweep(const PathState& pi, const std::vector<double>& alphas) {
    if (std::abs(pi.b) <= kDegeneracyThreshold) {
        throw UndefinedRatioError("bias sweep needs b != 0");
    }
    const Complex truth = pi.a / pi.b;
    std::vector<BiasRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        const Complex measured = weak_ratio(pi, alpha);
        rows.push_back({alpha, measured, truth, std::abs(measured - truth)});
    }
    return rows;
}

double fidelity(const PathState& p, const PathState& q) {
    const double overlap = std::norm(std::conj(p.a) * q.a + std::conj(p.b) * q.b);
    return std::clamp(overlap, 0.0, 1.0);
}

PathState canonical_phase(const PathState& p) {
    const double mag_a = std::abs(p.a);
    if (mag_a > 1e-12) {
        const Complex phase = std::conj(p.a) / mag_a;
        return {Complex{mag_a, 0.0}, p.b * phase};
    }
    const double mag_b = std::abs(p.b);
    if (mag_b > 1e-12) {
        const Complex phase = std::conj(p.b) / mag_b;
        return {p.a * phase, Complex{mag_b, 0.0}};
    }
    throw std::invalid_argument("cannot fix the phase of the zero state");
}

}  // namespace wvsim
