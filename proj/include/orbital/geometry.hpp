#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace orbital {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

// Polar position inside the disk: radial distance from the center and the
// counter-clockwise angle from the anchor direction (positive x-axis).
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

// Attachment point on the disk boundary; its radius is implicitly the disk
// radius, so only the angle is stored.
struct Port {
    double beta = 0.0;
};

enum class LeaderStyle { SL, OR };

inline std::string to_string(LeaderStyle s) {
    return s == LeaderStyle::SL ? "sl" : "or";
}

inline LeaderStyle style_from_string(const std::string& s) {
    if (s == "sl") return LeaderStyle::SL;
    if (s == "or") return LeaderStyle::OR;
    throw std::invalid_argument("unknown leader style: " + s);
}

enum class RotationDir { CW, CCW };

// Shorter angular separation between two directions plus the turning sense
// that realizes it (ties at pi resolve to CCW).
struct AngularDistance {
    double delta = 0.0;
    RotationDir dir = RotationDir::CCW;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Reduce an angle to [0, 2*pi). Throws std::invalid_argument for non-finite input.
double normalize_angle(double a);

// Shorter of the two rotations taking direction a to direction b.
AngularDistance angular_distance(double a, double b);

Vec2 to_cartesian(const PolarPoint& f);
Vec2 port_point(const Port& p, double radius);

// Euclidean length of a straight-line leader from feature f to port p on a
// disk of the given radius. Throws if the feature lies outside the disk.
double sl_length(const PolarPoint& f, const Port& p, double radius);

// Length of an orbital-radial leader: concentric arc at the feature's radius
// (shorter direction) followed by the radial run out to the boundary.
double or_length(const PolarPoint& f, const Port& p, double radius);

// True iff the open segments f1->p1 and f2->p2 properly intersect. Shared or
// touching endpoints do not count as a crossing. Throws on zero-length segments.
bool sl_cross(const PolarPoint& f1, const Port& p1,
              const PolarPoint& f2, const Port& p2, double radius);

// True iff the radial run of the inner leader passes through the open angular
// span of the outer leader's arc. Requires f_inner.r < f_outer.r (throws
// otherwise); arc-arc and radial-radial contacts cannot occur for features at
// distinct radii with distinct ports.
bool or_cross(const PolarPoint& f_inner, const Port& p_inner,
              const PolarPoint& f_outer, const Port& p_outer, double radius);

// True iff the two leaders cross, dispatching on style. For OR the pair is
// sorted by feature radius internally.
bool leaders_cross(LeaderStyle style,
                   const PolarPoint& f1, const Port& p1,
                   const PolarPoint& f2, const Port& p2, double radius);

// Length of a single leader of the given style.
double leader_length(LeaderStyle style, const PolarPoint& f, const Port& p, double radius);

}  // namespace orbital
