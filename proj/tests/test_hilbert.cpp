#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "wvsim/hilbert.hpp"

using namespace wvsim;
using wvtest::check_close;
using wvtest::check_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_operator_close(const Operator& actual, const Operator& expected, double tol = 1e-12) {
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            check_close(actual.m[r][c], expected.m[r][c], tol);
        }
    }
}

}  // namespace

TEST_CASE("make_path_state keeps already normalized amplitudes") {
    const PathState p = make_path_state({0.6, 0.0}, {0.8, 0.0});
    check_close(p.a, {0.6, 0.0});
    check_close(p.b, {0.8, 0.0});
}

TEST_CASE("make_path_state normalizes") {
    const PathState p = make_path_state({1.0, 0.0}, {1.0, 0.0});
    check_close(p.a, {kInvSqrt2, 0.0});
    check_close(p.b, {kInvSqrt2, 0.0});
}

TEST_CASE("make_path_state rejects the zero vector and non-finite input") {
    CHECK_THROWS_AS(make_path_state({0.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_path_state({std::nan(""), 0.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("make_spin_state normalizes and flags the result") {
    const SpinState s = make_spin_state({3.0, 0.0}, {0.0, 4.0});
    CHECK(s.normalized);
    check_close(s.up, {0.6, 0.0});
    check_close(s.down, {0.0, 0.8});
    CHECK_THROWS_AS(make_spin_state({0.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("tensor lays out amplitudes in the fixed basis order") {
    const JointState s1 = tensor(make_path_state({1.0, 0.0}, {1.0, 0.0}), spin_up_x());
    check_state(s1, wvtest::joint({kInvSqrt2, 0.0}, {0.0, 0.0}, {kInvSqrt2, 0.0}, {0.0, 0.0}));

    const JointState s2 = tensor(make_path_state({1.0, 0.0}, {0.0, 0.0}),
                                 make_spin_state({0.0, 0.0}, {1.0, 0.0}));
    check_state(s2, wvtest::joint({0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}));

    const JointState s3 = tensor(make_path_state({0.6, 0.0}, {0.8, 0.0}), spin_up_x());
    check_state(s3, wvtest::joint({0.6, 0.0}, {0.0, 0.0}, {0.8, 0.0}, {0.0, 0.0}));
}

TEST_CASE("tensor respects norms") {
    wvtest::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const JointState s = tensor(rng.path_state(), rng.spin_state());
        CHECK(std::abs(state_norm(s) - 1.0) <= 1e-12);
    }
}

TEST_CASE("inner product conventions") {
    wvtest::Rng rng(12);
    const JointState v = rng.joint_state();
    check_close(inner(v, v), {1.0, 0.0});

    const JointState e0 = wvtest::joint({1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0});
    const JointState e2 = wvtest::joint({0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0});
    check_close(inner(e0, e2), {0.0, 0.0});

    const JointState iv = wvtest::joint({0.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0});
    check_close(inner(iv, e0), {0.0, -1.0});
}

TEST_CASE("apply_operator is the fixed-basis matrix-vector product") {
    wvtest::Rng rng(13);
    const JointState v = rng.joint_state();
    check_state(apply_operator(identity_operator(), v), v);

    const JointState s = tensor(make_path_state({0.6, 0.0}, {0.8, 0.0}), spin_up_x());
    check_state(apply_operator(path_projector(Arm::I), s),
                wvtest::joint({0.6, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}));
}

TEST_CASE("path projectors are complete, orthogonal, rank 2") {
    const Operator pi = path_projector(Arm::I);
    const Operator pii = path_projector(Arm::II);
    check_operator_close(pi + pii, identity_operator());
    check_operator_close(pi * pii, Operator{});
    check_close(trace(pi), {2.0, 0.0});
}

TEST_CASE("postselect_projector special cases") {
    check_operator_close(postselect_projector(make_path_state({1.0, 0.0}, {0.0, 0.0})),
                         path_projector(Arm::I));
    const Operator p = postselect_projector(symmetric_path_state());
    check_close(trace(p), {2.0, 0.0});
    check_operator_close(p * p, p);
}

TEST_CASE("projector constructors give Hermitian idempotents") {
    wvtest::Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const Operator p = postselect_projector(rng.path_state());
        check_operator_close(p * p, p);
        check_operator_close(adjoint(p), p);
    }
    for (Arm arm : {Arm::I, Arm::II}) {
        const Operator p = path_projector(arm);
        check_operator_close(p * p, p);
        check_operator_close(adjoint(p), p);
        const JointState v = rng.joint_state();
        check_state(apply_operator(p, apply_operator(p, v)), apply_operator(p, v));
    }
}
