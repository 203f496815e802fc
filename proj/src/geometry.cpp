#include "orbital/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace orbital {

namespace {

// Signed orientations whose magnitude falls within this band are treated as
// collinear; contacts are then not reported as crossings.
constexpr double kOrientEps = 1e-12;

int orient_sign(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (std::abs(v) <= kOrientEps) return 0;
    return v > 0.0 ? 1 : -1;
}

}  // namespace

double normalize_angle(double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("normalize_angle: non-finite angle");
    double r = std::fmod(a, kTau);
    if (r < 0.0) r += kTau;
    if (r >= kTau) r = 0.0;  // guard against fmod rounding up to 2*pi
    return r;
}

AngularDistance angular_distance(double a, double b) {
    const double diff = normalize_angle(b - a);  // CCW rotation from a to b
    if (diff < kPi) return {diff, RotationDir::CCW};
    if (diff > kPi) return {kTau - diff, RotationDir::CW};
    return {kPi, RotationDir::CCW};  // tie: both ways are pi, resolve CCW
}

Vec2 to_cartesian(const PolarPoint& f) {
    return {f.r * std::cos(f.theta), f.r * std::sin(f.theta)};
}

Vec2 port_point(const Port& p, double radius) {
    return {radius * std::cos(p.beta), radius * std::sin(p.beta)};
}

double sl_length(const PolarPoint& f, const Port& p, double radius) {
    if (f.r > radius) throw std::invalid_argument("sl_length: feature outside disk");
    const double c = std::cos(f.theta - p.beta);
    const double sq = f.r * f.r + radius * radius - 2.0 * f.r * radius * c;
    return std::sqrt(std::max(sq, 0.0));
}

double or_length(const PolarPoint& f, const Port& p, double radius) {
    if (f.r > radius) throw std::invalid_argument("or_length: feature outside disk");
    const double delta = angular_distance(f.theta, p.beta).delta;
    return f.r * delta + (radius - f.r);
}

bool sl_cross(const PolarPoint& f1, const Port& p1,
              const PolarPoint& f2, const Port& p2, double radius) {
    const Vec2 a1 = to_cartesian(f1);
    const Vec2 b1 = port_point(p1, radius);
    const Vec2 a2 = to_cartesian(f2);
    const Vec2 b2 = port_point(p2, radius);

    const auto sq_len = [](const Vec2& u, const Vec2& v) {
        const double dx = u.x - v.x, dy = u.y - v.y;
        return dx * dx + dy * dy;
    };
    if (sq_len(a1, b1) == 0.0 || sq_len(a2, b2) == 0.0)
        throw std::invalid_argument("sl_cross: zero-length segment");

    const int o1 = orient_sign(a1, b1, a2);
    const int o2 = orient_sign(a1, b1, b2);
    const int o3 = orient_sign(a2, b2, a1);
    const int o4 = orient_sign(a2, b2, b1);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool or_cross(const PolarPoint& f_inner, const Port& p_inner,
              const PolarPoint& f_outer, const Port& p_outer, double radius) {
    if (!(f_inner.r < f_outer.r))
        throw std::invalid_argument("or_cross: inner feature must have the smaller radius");
    (void)radius;  // the radial run always reaches the boundary, so only angles matter

    const AngularDistance span = angular_distance(f_outer.theta, p_outer.beta);
    if (span.delta == 0.0) return false;  // outer arc degenerate, radial-only leader

    // The inner leader's radial run sits at angle beta_inner and covers radii
    // [f_inner.r, radius], so it meets the outer arc iff beta_inner lies
    // strictly inside the arc's open angular span.
    const double off = span.dir == RotationDir::CCW
                           ? normalize_angle(p_inner.beta - f_outer.theta)
                           : normalize_angle(f_outer.theta - p_inner.beta);
    return off > 0.0 && off < span.delta;
}

bool leaders_cross(LeaderStyle style,
                   const PolarPoint& f1, const Port& p1,
                   const PolarPoint& f2, const Port& p2, double radius) {
    if (style == LeaderStyle::SL) return sl_cross(f1, p1, f2, p2, radius);
    if (f1.r < f2.r) return or_cross(f1, p1, f2, p2, radius);
    return or_cross(f2, p2, f1, p1, radius);
}

double leader_length(LeaderStyle style, const PolarPoint& f, const Port& p, double radius) {
    return style == LeaderStyle::SL ? sl_length(f, p, radius) : or_length(f, p, radius);
}

}  // namespace orbital
