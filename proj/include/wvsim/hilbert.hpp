// hilbert.hpp
// Exact complex state/operator algebra for the 2(path) x 2(spin) system.
//
// Conventions, fixed once and used everywhere:
//   - Spin amplitudes are stored in the x-quantization basis {|up_x>, |down_x>}.
//     In that basis the Pauli expectation values of a spinor (u, d) are
//       sx = |u|^2 - |d|^2,  sy = -2 Im(u* d),  sz = 2 Re(u* d).
//   - Joint amplitudes are ordered (I,up), (I,down), (II,up), (II,down).
//   - Inner products are conjugate-linear in the first argument.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "wvsim/errors.hpp"

namespace wvsim {

using Complex = std::complex<double>;

// Normalization tolerance at construction.
inline constexpr double kNormTolerance = 1e-9;
// Internal algebra tolerance; doubles as the degeneracy threshold for
// weak-value denominators and post-selection weights.
inline constexpr double kDegeneracyThreshold = 1e-12;

enum class Arm { I = 0, II = 1 };

enum class SpinComponent { Up = 0, Down = 1 };

// Normalized two-path amplitude pair (a on path I, b on path II).
struct PathState {
    Complex a;
    Complex b;
};

// Spinor in the x basis. `normalized` is set by the factory and by operations
// that emit unit-norm spinors.
struct SpinState {
    Complex up;
    Complex down;
    bool normalized = false;
};

// Four amplitudes on path (x) spin, basis order (I up, I down, II up, II down).
struct JointState {
    std::array<Complex, 4> c{};

    static constexpr std::size_t index(Arm arm, SpinComponent s) {
        return 2 * static_cast<std::size_t>(arm) + static_cast<std::size_t>(s);
    }
    Complex& amp(Arm arm, SpinComponent s) { return c[index(arm, s)]; }
    const Complex& amp(Arm arm, SpinComponent s) const { return c[index(arm, s)]; }
};

// Dense 4x4 matrix over the joint basis.
struct Operator {
    std::array<std::array<Complex, 4>, 4> m{};
};

// Normalizes (a, b); throws std::invalid_argument on the zero vector or
// non-finite input.
PathState make_path_state(Complex a, Complex b);

// (|I> + |II>)/sqrt(2), the usual post-selection state.
PathState symmetric_path_state();

// Normalizes (up, down); throws std::invalid_argument on zero/non-finite input.
SpinState make_spin_state(Complex up, Complex down);

SpinState spin_up_x();

// Product state p (x) s.
JointState tensor(const PathState& p, const SpinState& s);

// <x|y>, conjugate-linear in x.
Complex inner(const JointState& x, const JointState& y);

double state_norm(const JointState& s);

JointState apply_operator(const Operator& op, const JointState& s);

Operator identity_operator();

// |arm><arm| (x) identity on spin.
Operator path_projector(Arm arm);

// |pf><pf| (x) identity on spin.
Operator postselect_projector(const PathState& pf);

Operator operator+(const Operator& x, const Operator& y);
Operator operator-(const Operator& x, const Operator& y);
Operator operator*(const Operator& x, const Operator& y);
Operator operator*(Complex scale, const Operator& x);
Operator adjoint(const Operator& x);
Complex trace(const Operator& x);

}  // namespace wvsim
