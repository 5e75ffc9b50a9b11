#include "wvsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace wvsim {

namespace {

void require_normalized(const SpinState& s) {
    const double n2 = std::norm(s.up) + std::norm(s.down);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("spin state must be normalized");
    }
}

}  // namespace

BlochVector bloch_exact(const SpinState& s) {
    require_normalized(s);
    const Complex ud = std::conj(s.up) * s.down;
    BlochVector b;
    // + 0.0 flushes negative zeros out of reports
    b.sx = std::norm(s.up) - std::norm(s.down) + 0.0;
    b.sy = -2.0 * ud.imag() + 0.0;
    b.sz = 2.0 * ud.real() + 0.0;
    return b;
}

double bloch_component(const BlochVector& b, MeasurementBasis basis) {
    switch (basis) {
        case MeasurementBasis::X: return b.sx;
        case MeasurementBasis::Y: return b.sy;
        case MeasurementBasis::Z: return b.sz;
    }
    throw std::invalid_argument("unknown measurement basis");
}

ShotRecord sample(const SpinState& s, MeasurementBasis basis, std::uint64_t shots,
                  std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    const double component = bloch_component(bloch_exact(s), basis);
    const double p = std::clamp((1.0 + component) / 2.0, 0.0, 1.0);
    std::mt19937_64 gen(seed);
    std::binomial_distribution<std::uint64_t> dist(shots, p);
    return {basis, shots, dist(gen), seed};
}

std::array<ShotRecord, 3> sample_tomography(const SpinState& s, std::uint64_t shots,
                                            std::uint64_t seed) {
    return {sample(s, MeasurementBasis::X, shots, seed),
            sample(s, MeasurementBasis::Y, shots, seed + 1),
            sample(s, MeasurementBasis::Z, shots, seed + 2)};
}

BlochEstimate estimate_bloch(const ShotRecord& rx, const ShotRecord& ry, const ShotRecord& rz) {
    if (rx.basis != MeasurementBasis::X || ry.basis != MeasurementBasis::Y ||
        rz.basis != MeasurementBasis::Z) {
        throw std::invalid_argument("estimate_bloch needs one record per basis, in x, y, z order");
    }
    const std::array<const ShotRecord*, 3> records{&rx, &ry, &rz};
    BlochEstimate est;
    std::array<double, 3> components{};
    for (std::size_t i = 0; i < 3; ++i) {
        const ShotRecord& r = *records[i];
        if (r.shots == 0 || r.plus_count > r.shots) {
            throw std::invalid_argument("malformed shot record");
        }
        const double shots = static_cast<double>(r.shots);
        const double hat = std::clamp(2.0 * static_cast<double>(r.plus_count) / shots - 1.0,
                                      -1.0, 1.0);
        components[i] = hat;
        est.std_error[i] = std::sqrt(std::max(0.0, 1.0 - hat * hat) / shots);
    }
    est.value = {components[0], components[1], components[2]};
    return est;
}

RotationAngles rotation_angles(const BlochVector& b) {
    // A single vanishing projection falls back on atan2(0, 0) = 0; only a
    // vector degenerate in both planes carries no angle at all.
    if (std::hypot(b.sx, b.sy) <= kDegeneracyThreshold &&
        std::hypot(b.sx, b.sz) <= kDegeneracyThreshold) {
        throw DegenerateAngleError("Bloch projections too short to define rotation angles");
    }
    RotationAngles angles;
    angles.theta_xy = std::atan2(b.sy, b.sx) + 0.0;
    angles.theta_xz = std::atan2(b.sz, b.sx) + 0.0;
    // atan2 reaches -pi only through a signed negative zero; fold onto (-pi, pi].
    if (angles.theta_xy == -M_PI) angles.theta_xy = M_PI;
    if (angles.theta_xz == -M_PI) angles.theta_xz = M_PI;
    return angles;
}

}  // namespace wvsim
