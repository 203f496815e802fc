#pragma once

// Dense-sampling geometric oracle used to validate the analytic crossing
// predicates. A leader is traced as a parametric path; the oracle samples one
// path densely, measures the exact point-to-path distance to the other, and
// refines every local minimum by golden-section search. Verdicts:
//   1  -> paths meet (refined distance < kCrossEps)
//   0  -> paths clearly separated (distance > kClearEps)
//  -1  -> ambiguous (near-contact); callers redraw the random pair
// The oracle is deliberately independent of the production predicates: it
// never looks at orientation signs or angular spans, only at distances.

#include <algorithm>
#include <cmath>
#include <vector>

#include "orbital/geometry.hpp"

namespace oracle {

using orbital::AngularDistance;
using orbital::kPi;
using orbital::kTau;
using orbital::LeaderStyle;
using orbital::PolarPoint;
using orbital::Port;
using orbital::RotationDir;
using orbital::Vec2;

inline constexpr double kCrossEps = 1e-9;
inline constexpr double kClearEps = 1e-6;

inline double dist2(const Vec2& a, const Vec2& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist_point_segment(const Vec2& q, const Vec2& a, const Vec2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0.0 ? ((q.x - a.x) * vx + (q.y - a.y) * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 c{a.x + t * vx, a.y + t * vy};
    return std::sqrt(dist2(q, c));
}

// Distance from q to the circular arc centred at the origin with radius r,
// running from angle a0 through a signed sweep (positive = CCW).
inline double dist_point_arc(const Vec2& q, double r, double a0, double sweep) {
    const double qr = std::hypot(q.x, q.y);
    const double qa = std::atan2(q.y, q.x);
    // Is q's angle inside the closed sweep from a0?
    double rel = qa - a0;
    rel -= kTau * std::floor(rel / kTau);  // now in [0, 2*pi)
    const bool inside = sweep >= 0.0 ? rel <= sweep : rel >= kTau + sweep || rel == 0.0;
    if (inside) return std::abs(qr - r);
    const double a1 = a0 + sweep;
    const Vec2 e0{r * std::cos(a0), r * std::sin(a0)};
    const Vec2 e1{r * std::cos(a1), r * std::sin(a1)};
    return std::sqrt(std::min(dist2(q, e0), dist2(q, e1)));
}

// Parametric leader path by arc length.
struct LeaderPath {
    LeaderStyle style;
    PolarPoint f;
    Port p;
    double radius;
    double arc_sweep = 0.0;  // OR: signed angle of the concentric arc (CCW > 0)
    double arc_len = 0.0;    // OR: length of the arc part
    double total_len = 0.0;

    LeaderPath(LeaderStyle s, const PolarPoint& feature, const Port& port, double R)
        : style(s), f(feature), p(port), radius(R) {
        if (style == LeaderStyle::SL) {
            const Vec2 a = orbital::to_cartesian(f);
            const Vec2 b = orbital::port_point(p, R);
            total_len = std::sqrt(dist2(a, b));
        } else {
            const AngularDistance turn = orbital::angular_distance(f.theta, p.beta);
            arc_sweep = turn.dir == RotationDir::CCW ? turn.delta : -turn.delta;
            arc_len = f.r * turn.delta;
            total_len = arc_len + (R - f.r);
        }
    }

    Vec2 at(double t) const {
        t = std::clamp(t, 0.0, total_len);
        if (style == LeaderStyle::SL) {
            const Vec2 a = orbital::to_cartesian(f);
            const Vec2 b = orbital::port_point(p, radius);
            const double u = total_len > 0.0 ? t / total_len : 0.0;
            return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
        }
        if (t <= arc_len && arc_len > 0.0) {
            const double ang = f.theta + arc_sweep * (t / arc_len);
            return {f.r * std::cos(ang), f.r * std::sin(ang)};
        }
        const double rr = f.r + (t - arc_len);
        return {rr * std::cos(p.beta), rr * std::sin(p.beta)};
    }

    // Exact distance from an arbitrary point to this path.
    double dist_to(const Vec2& q) const {
        if (style == LeaderStyle::SL)
            return dist_point_segment(q, orbital::to_cartesian(f),
                                      orbital::port_point(p, radius));
        double best = dist_point_segment(
            q, {f.r * std::cos(p.beta), f.r * std::sin(p.beta)},
            orbital::port_point(p, radius));
        if (arc_len > 0.0)
            best = std::min(best, dist_point_arc(q, f.r, f.theta, arc_sweep));
        return best;
    }
};

// Golden-section refinement of t -> dist(A.at(t), B) on [lo, hi].
inline double refine_min(const LeaderPath& A, const LeaderPath& B, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - (b - a) * kInvPhi;
    double d = a + (b - a) * kInvPhi;
    double fc = B.dist_to(A.at(c));
    double fd = B.dist_to(A.at(d));
    for (int it = 0; it < 120 && (b - a) > 1e-13 * std::max(1.0, A.total_len); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * kInvPhi;
            fc = B.dist_to(A.at(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * kInvPhi;
            fd = B.dist_to(A.at(d));
        }
    }
    return std::min(fc, fd);
}

// Minimum distance from path A to path B: dense sampling along A with exact
// point-to-path distances, then local refinement around every sampled local
// minimum.
inline double min_distance_one_way(const LeaderPath& A, const LeaderPath& B, int samples) {
    std::vector<double> d(static_cast<std::size_t>(samples) + 1);
    const double step = A.total_len / samples;
    for (int i = 0; i <= samples; ++i) d[i] = B.dist_to(A.at(i * step));
    double best = *std::min_element(d.begin(), d.end());
    for (int i = 0; i <= samples; ++i) {
        const bool left_ok = i == 0 || d[i] <= d[i - 1];
        const bool right_ok = i == samples || d[i] <= d[i + 1];
        if (!(left_ok && right_ok)) continue;
        const double lo = (i == 0 ? 0 : i - 1) * step;
        const double hi = (i == samples ? samples : i + 1) * step;
        best = std::min(best, refine_min(A, B, lo, hi));
    }
    return best;
}

inline double min_distance(const LeaderPath& A, const LeaderPath& B, int samples = 2048) {
    return std::min(min_distance_one_way(A, B, samples),
                    min_distance_one_way(B, A, samples));
}

// Crossing verdict for two leaders of the same style; see file header.
inline int crossing_verdict(LeaderStyle style, const PolarPoint& f1, const Port& p1,
                            const PolarPoint& f2, const Port& p2, double R,
                            int samples = 2048) {
    const LeaderPath A(style, f1, p1, R);
    const LeaderPath B(style, f2, p2, R);
    const double d = min_distance(A, B, samples);
    if (d < kCrossEps) return 1;
    if (d > kClearEps) return 0;
    return -1;
}

}  // namespace oracle
