// tomography.hpp
// Spin tomography of the post-selected beam: exact Bloch components,
// seeded binomial shot sampling, linear-inversion estimation, and the
// rotation angles relative to the unperturbed |up_x> polarization.

#pragma once

#include <array>
#include <cstdint>

#include "wvsim/hilbert.hpp"

namespace wvsim {

struct BlochVector {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 0.0;
};

enum class MeasurementBasis { X = 0, Y = 1, Z = 2 };

// Aggregate outcome counts of projective measurements along one axis.
struct ShotRecord {
    MeasurementBasis basis = MeasurementBasis::X;
    std::uint64_t shots = 0;
    std::uint64_t plus_count = 0;
    std::uint64_t seed = 0;
};

struct BlochEstimate {
    BlochVector value;
    std::array<double, 3> std_error{};  // binomial propagation, per component
};

// Angles of the Bloch projection measured from the +x axis.
struct RotationAngles {
    double theta_xy = 0.0;
    double theta_xz = 0.0;
};

// (sx, sy, sz) of a normalized spinor; unit length for pure states.
BlochVector bloch_exact(const SpinState& s);

double bloch_component(const BlochVector& b, MeasurementBasis basis);

// Draws plus_count ~ Binomial(shots, (1 + s_basis)/2) from a generator seeded
// with `seed`. Identical inputs give identical records.
ShotRecord sample(const SpinState& s, MeasurementBasis basis, std::uint64_t shots,
                  std::uint64_t seed);

// x, y, z records using seeds seed, seed+1, seed+2.
std::array<ShotRecord, 3> sample_tomography(const SpinState& s, std::uint64_t shots,
                                            std::uint64_t seed);

// Linear inversion: each component is 2 plus_count/shots - 1 with standard
// error sqrt((1 - s^2)/shots). Records must carry the x, y, z bases in order.
BlochEstimate estimate_bloch(const ShotRecord& rx, const ShotRecord& ry, const ShotRecord& rz);

// theta_xy = atan2(sy, sx), theta_xz = atan2(sz, sx). Throws
// DegenerateAngleError when either projection is too short to carry an angle.
RotationAngles rotation_angles(const BlochVector& b);

}  // namespace wvsim
