#include "wvsim/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace wvsim {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

PathState make_path_state(Complex a, Complex b) {
    if (!finite(a) || !finite(b)) {
        throw std::invalid_argument("path state amplitudes must be finite");
    }
    const double n2 = std::norm(a) + std::norm(b);
    if (n2 <= 1e-12) {
        throw std::invalid_argument("cannot normalize the zero path state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    return {a * inv, b * inv};
}

PathState symmetric_path_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return {Complex{s, 0.0}, Complex{s, 0.0}};
}

SpinState make_spin_state(Complex up, Complex down) {
    if (!finite(up) || !finite(down)) {
        throw std::invalid_argument("spin state amplitudes must be finite");
    }
    const double n2 = std::norm(up) + std::norm(down);
    if (n2 <= 1e-12) {
        throw std::invalid_argument("cannot normalize the zero spin state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    return {up * inv, down * inv, true};
}

SpinState spin_up_x() { return {Complex{1.0, 0.0}, Complex{0.0, 0.0}, true}; }

JointState tensor(const PathState& p, const SpinState& s) {
    JointState out;
    out.amp(Arm::I, SpinComponent::Up) = p.a * s.up;
    out.amp(Arm::I, SpinComponent::Down) = p.a * s.down;
    out.amp(Arm::II, SpinComponent::Up) = p.b * s.up;
    out.amp(Arm::II, SpinComponent::Down) = p.b * s.down;
    return out;
}

Complex inner(const JointState& x, const JointState& y) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        acc += std::conj(x.c[i]) * y.c[i];
    }
    return acc;
}

double state_norm(const JointState& s) {
    double n2 = 0.0;
    for (const Complex& z : s.c) {
        n2 += std::norm(z);
    }
    return std::sqrt(n2);
}

JointState apply_operator(const Operator& op, const JointState& s) {
    JointState out;
    for (std::size_t r = 0; r < 4; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < 4; ++k) {
            acc += op.m[r][k] * s.c[k];
        }
        out.c[r] = acc;
    }
    return out;
}

Operator identity_operator() {
    Operator op;
    for (std::size_t i = 0; i < 4; ++i) {
        op.m[i][i] = Complex{1.0, 0.0};
    }
    return op;
}

Operator path_projector(Arm arm) {
    Operator op;
    const std::size_t base = 2 * static_cast<std::size_t>(arm);
    op.m[base][base] = Complex{1.0, 0.0};
    op.m[base + 1][base + 1] = Complex{1.0, 0.0};
    return op;
}

Operator postselect_projector(const PathState& pf) {
    // Block pattern: m[(arm,s)][(arm',s)] = pf(arm) conj(pf(arm')).
    const std::array<Complex, 2> f{pf.a, pf.b};
    Operator op;
    for (std::size_t arm = 0; arm < 2; ++arm) {
        for (std::size_t armp = 0; armp < 2; ++armp) {
            const Complex block = f[arm] * std::conj(f[armp]);
            op.m[2 * arm][2 * armp] = block;
            op.m[2 * arm + 1][2 * armp + 1] = block;
        }
    }
    return op;
}

Operator operator+(const Operator& x, const Operator& y) {
    Operator out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out.m[r][c] = x.m[r][c] + y.m[r][c];
        }
    }
    return out;
}

Operator operator-(const Operator& x, const Operator& y) {
    Operator out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out.m[r][c] = x.m[r][c] - y.m[r][c];
        }
    }
    return out;
}

Operator operator*(const Operator& x, const Operator& y) {
    Operator out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < 4; ++k) {
                acc += x.m[r][k] * y.m[k][c];
            }
            out.m[r][c] = acc;
        }
    }
    return out;
}

Operator operator*(Complex scale, const Operator& x) {
    Operator out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out.m[r][c] = scale * x.m[r][c];
        }
    }
    return out;
}

Operator adjoint(const Operator& x) {
    Operator out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out.m[r][c] = std::conj(x.m[c][r]);
        }
    }
    return out;
}

Complex trace(const Operator& x) {
    return x.m[0][0] + x.m[1][1] + x.m[2][2] + x.m[3][3];
}

}  // namespace wvsim
