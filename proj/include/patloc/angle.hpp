#pragma once

#include <cmath>
#include <numbers>

namespace patloc {

inline constexpr double pi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / pi; }

/// Wrap an angle in degrees into [-180, 180). Idempotent.
inline double normalize_deg(double deg) {
    double x = std::fmod(deg + 180.0, 360.0);
    if (x < 0.0) x += 360.0;
    return x - 180.0;
}

/// Planar angle in degrees, normalized to [-180, 180) on construction.
/// Degrees at every external interface; convert to radians only for math.
struct angle_deg {
    double value = 0.0;

    angle_deg() = default;
    explicit angle_deg(double deg) : value(normalize_deg(deg)) {}

    double deg() const { return value; }
    double rad() const { return deg2rad(value); }

    friend angle_deg operator+(angle_deg a, angle_deg b) { return angle_deg(a.value + b.value); }
    friend angle_deg operator-(angle_deg a, angle_deg b) { return angle_deg(a.value - b.value); }
    friend bool operator==(angle_deg a, angle_deg b) { return a.value == b.value; }
};

} // namespace patloc
