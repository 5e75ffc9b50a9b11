#include "wvsim/experiment.hpp"

#include <cmath>
#include <stdexcept>

namespace wvsim {

JointState prepare(const PathState& pi) { return tensor(pi, spin_up_x()); }

Operator spin_rotation(const CouplingConfig& cfg) {
    if (!std::isfinite(cfg.alpha)) {
        throw std::invalid_argument("coupling angle must be finite");
    }
    const Complex c{std::cos(cfg.alpha), 0.0};
    const Complex mis{0.0, -std::sin(cfg.alpha)};  // -i sin(alpha)
    Operator op = identity_operator();
    const std::size_t base = 2 * static_cast<std::size_t>(cfg.arm);
    op.m[base][base] = c;
    op.m[base][base + 1] = mis;
    op.m[base + 1][base] = mis;
    op.m[base + 1][base + 1] = c;
    return op;
}

JointState couple(const JointState& s, const CouplingConfig& cfg) {
    if (!std::isfinite(cfg.alpha)) {
        throw std::invalid_argument("coupling angle must be finite");
    }
    const Complex c{std::cos(cfg.alpha), 0.0};
    const Complex mis{0.0, -std::sin(cfg.alpha)};
    const Complex up = s.amp(cfg.arm, SpinComponent::Up);
    const Complex down = s.amp(cfg.arm, SpinComponent::Down);
    JointState out = s;
    out.amp(cfg.arm, SpinComponent::Up) = c * up + mis * down;
    out.amp(cfg.arm, SpinComponent::Down) = mis * up + c * down;
    return out;
}

ExperimentOutput post_select(const JointState& s, const PathState& pf) {
    const Complex up = std::conj(pf.a) * s.amp(Arm::I, SpinComponent::Up) +
                       std::conj(pf.b) * s.amp(Arm::II, SpinComponent::Up);
    const Complex down = std::conj(pf.a) * s.amp(Arm::I, SpinComponent::Down) +
                         std::conj(pf.b) * s.amp(Arm::II, SpinComponent::Down);
    const double p = std::norm(up) + std::norm(down);
    if (p < kDegeneracyThreshold) {
        throw DegeneratePostSelectionError(
            "post-selection failed completely: conditional spin undefined");
    }
    const double inv = 1.0 / std::sqrt(p);
    ExperimentOutput out;
    out.conditional_spin = SpinState{up * inv, down * inv, true};
    out.success_probability = p;
    out.unnormalized_up = up;
    out.unnormalized_down = down;
    return out;
}

ExperimentOutput run(const PathState& pi, const CouplingConfig& cfg, const PathState& pf) {
    return post_select(couple(prepare(pi), cfg), pf);
}

}  // namespace wvsim
