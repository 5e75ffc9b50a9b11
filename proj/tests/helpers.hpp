// Shared helpers for the test suites: complex comparisons and seeded
// generators for random states and angles.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "wvsim/hilbert.hpp"

namespace wvtest {

using wvsim::Complex;

inline void check_close(Complex actual, Complex expected, double tol = 1e-12) {
    CHECK(std::abs(actual.real() - expected.real()) <= tol);
    CHECK(std::abs(actual.imag() - expected.imag()) <= tol);
}

inline void check_state(const wvsim::JointState& actual, const wvsim::JointState& expected,
                        double tol = 1e-12) {
    for (std::size_t i = 0; i < 4; ++i) {
        check_close(actual.c[i], expected.c[i], tol);
    }
}

inline wvsim::JointState joint(Complex c0, Complex c1, Complex c2, Complex c3) {
    return {{c0, c1, c2, c3}};
}

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    Complex amplitude() {
        std::normal_distribution<double> n(0.0, 1.0);
        return {n(gen), n(gen)};
    }

    wvsim::PathState path_state() { return wvsim::make_path_state(amplitude(), amplitude()); }

    // Path state whose overlap with the symmetric post-selection stays above
    // `min_overlap`, keeping weak-value denominators well conditioned.
    wvsim::PathState admissible_path_state(double min_overlap = 0.3) {
        for (;;) {
            wvsim::PathState pi = path_state();
            if (std::abs(pi.a + pi.b) / std::sqrt(2.0) > min_overlap) return pi;
        }
    }

    wvsim::JointState joint_state() {
        wvsim::JointState s{{amplitude(), amplitude(), amplitude(), amplitude()}};
        double n2 = 0.0;
        for (const Complex& z : s.c) n2 += std::norm(z);
        const double inv = 1.0 / std::sqrt(n2);
        for (Complex& z : s.c) z *= inv;
        return s;
    }

    wvsim::SpinState spin_state() { return wvsim::make_spin_state(amplitude(), amplitude()); }
};

}  // namespace wvtest
