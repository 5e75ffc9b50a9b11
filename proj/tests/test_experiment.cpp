#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "wvsim/experiment.hpp"
#include "wvsim/tsvf.hpp"

using namespace wvsim;
using wvtest::check_close;
using wvtest::check_state;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("prepare tensors the path state with spin up_x") {
    check_state(prepare(make_path_state({0.6, 0.0}, {0.8, 0.0})),
                wvtest::joint({0.6, 0.0}, {0.0, 0.0}, {0.8, 0.0}, {0.0, 0.0}));
    check_state(prepare(make_path_state({1.0, 0.0}, {0.0, 0.0})),
                wvtest::joint({1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}));
    wvtest::Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        CHECK(std::abs(state_norm(prepare(rng.path_state())) - 1.0) <= 1e-12);
    }
}

TEST_CASE("couple rotates the spin inside the chosen arm only") {
    const PathState pi = make_path_state({0.6, 0.0}, {0.8, 0.0});
    const double alpha = 0.7;
    const JointState coupled = couple(prepare(pi), {Arm::II, alpha});
    check_state(coupled, wvtest::joint({0.6, 0.0}, {0.0, 0.0},
                                       {0.8 * std::cos(alpha), 0.0},
                                       {0.0, -0.8 * std::sin(alpha)}));
}

TEST_CASE("couple at alpha = 0 is the identity") {
    wvtest::Rng rng(32);
    const JointState s = rng.joint_state();
    check_state(couple(s, {Arm::I, 0.0}), s);
    check_state(couple(s, {Arm::II, 0.0}), s);
}

TEST_CASE("couple at alpha = pi/2 maps up_x to -i down_x") {
    const JointState s = couple(prepare(make_path_state({0.0, 0.0}, {1.0, 0.0})),
                                {Arm::II, M_PI / 2.0});
    check_state(s, wvtest::joint({0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, -1.0}));
}

TEST_CASE("spin_rotation is unitary and couple preserves norms") {
    wvtest::Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        const CouplingConfig cfg{i % 2 == 0 ? Arm::I : Arm::II, rng.uniform(-8.0, 8.0)};
        const JointState v = rng.joint_state();
        const JointState w = rng.joint_state();
        const JointState rv = apply_operator(spin_rotation(cfg), v);
        check_close(inner(rv, rv), inner(v, v));
        check_state(couple(v, cfg), rv);
        // rotation additivity
        const CouplingConfig cfg2{cfg.arm, rng.uniform(-8.0, 8.0)};
        check_state(couple(couple(w, cfg), cfg2), couple(w, {cfg.arm, cfg.alpha + cfg2.alpha}));
    }
}

TEST_CASE("post_select keeps the overlap spinor") {
    const ExperimentOutput full = post_select(prepare(symmetric_path_state()),
                                              symmetric_path_state());
    CHECK(full.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    check_close(full.conditional_spin.up, {1.0, 0.0});
    check_close(full.conditional_spin.down, {0.0, 0.0});

    CHECK_THROWS_AS(post_select(prepare(make_path_state({kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0})),
                                symmetric_path_state()),
                    DegeneratePostSelectionError);
}

TEST_CASE("post_select after a strong arm-II rotation") {
    const JointState s = couple(prepare(make_path_state({0.6, 0.0}, {0.8, 0.0})),
                                {Arm::II, M_PI / 2.0});
    const ExperimentOutput out = post_select(s, symmetric_path_state());
    check_close(out.unnormalized_up, {0.6 * kInvSqrt2, 0.0}, 1e-12);
    check_close(out.unnormalized_down, {0.0, -0.8 * kInvSqrt2}, 1e-12);
    CHECK(out.success_probability == doctest::Approx(0.5).epsilon(1e-12));
    check_close(out.conditional_spin.up, {0.6, 0.0}, 1e-12);
    check_close(out.conditional_spin.down, {0.0, -0.8}, 1e-12);
}

TEST_CASE("run composes prepare, couple, post_select") {
    const ExperimentOutput direct = run(make_path_state({0.6, 0.0}, {0.8, 0.0}),
                                        {Arm::II, M_PI / 2.0}, symmetric_path_state());
    CHECK(direct.success_probability == doctest::Approx(0.5).epsilon(1e-12));

    const ExperimentOutput uncoupled = run(symmetric_path_state(), {Arm::II, 0.0},
                                           symmetric_path_state());
    CHECK(uncoupled.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    check_close(uncoupled.conditional_spin.up, {1.0, 0.0});

    wvtest::Rng rng(34);
    for (int i = 0; i < 50; ++i) {
        const PathState pi = rng.path_state();
        const PathState pf = rng.path_state();
        const CouplingConfig cfg{Arm::II, rng.uniform(0.0, M_PI)};
        ExperimentOutput composed;
        try {
            composed = post_select(couple(prepare(pi), cfg), pf);
        } catch (const DegeneratePostSelectionError&) {
            CHECK_THROWS_AS(run(pi, cfg, pf), DegeneratePostSelectionError);
            continue;
        }
        const ExperimentOutput piped = run(pi, cfg, pf);
        CHECK(piped.success_probability ==
              doctest::Approx(composed.success_probability).epsilon(1e-12));
        check_close(piped.unnormalized_up, composed.unnormalized_up);
        check_close(piped.unnormalized_down, composed.unnormalized_down);
    }
}

TEST_CASE("run errors on complete destructive interference") {
    // symmetric input, arm II, alpha = pi: both spin components cancel at the
    // symmetric output port.
    CHECK_THROWS_AS(run(symmetric_path_state(), {Arm::II, M_PI}, symmetric_path_state()),
                    DegeneratePostSelectionError);
}

TEST_CASE("success probability is |<pf|pi>|^2 at alpha = 0 and bounded by 1") {
    wvtest::Rng rng(35);
    for (int i = 0; i < 100; ++i) {
        const PathState pi = rng.path_state();
        const PathState pf = rng.path_state();
        const Complex overlap = std::conj(pf.a) * pi.a + std::conj(pf.b) * pi.b;
        if (std::norm(overlap) < 1e-6) continue;
        const ExperimentOutput out = run(pi, {Arm::I, 0.0}, pf);
        CHECK(out.success_probability == doctest::Approx(std::norm(overlap)).epsilon(1e-10));

        const ExperimentOutput strong = run(pi, {Arm::I, rng.uniform(0.0, M_PI)}, pf);
        CHECK(strong.success_probability >= 0.0);
        CHECK(strong.success_probability <= 1.0 + 1e-12);
    }
}

TEST_CASE("conditional spin approaches up_x - i alpha w down_x in the weak limit") {
    wvtest::Rng rng(36);
    const double alpha = 1e-3;
    for (int i = 0; i < 100; ++i) {
        const PathState pi = rng.admissible_path_state();
        for (Arm arm : {Arm::I, Arm::II}) {
            const WeakValue w = arm == Arm::I
                                    ? projection_weak_values(pi, symmetric_path_state()).first
                                    : projection_weak_values(pi, symmetric_path_state()).second;
            const ExperimentOutput out = run(pi, {arm, alpha}, symmetric_path_state());
            const Complex measured = out.conditional_spin.down / out.conditional_spin.up;
            const Complex predicted = Complex{0.0, -alpha} * w;
            CHECK(std::abs(measured - predicted) <= 50.0 * alpha * alpha);
        }
    }
}
