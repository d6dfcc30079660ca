#pragma once

// Test-only oracles, independent of the library's collision code paths.

#include <algorithm>
#include <cmath>

#include "geometry.hpp"

namespace oracle {

using replan::Point2;
using replan::Rect;
using replan::Segment;

inline bool point_in_rect(const Point2& p, const Rect& r) {
    return p.x >= r.center.x - r.half_w && p.x <= r.center.x + r.half_w &&
           p.y >= r.center.y - r.half_h && p.y <= r.center.y + r.half_h;
}

// Dense point-membership sampling at a step of at most `step_frac` of the
// segment length.
inline bool seg_hits_rect_sampled(const Segment& s, const Rect& r, double step_frac = 1e-4) {
    double len = s.length();
    int steps = std::max(2, static_cast<int>(std::ceil(1.0 / step_frac)));
    if (len == 0.0) steps = 1;
    for (int i = 0; i <= steps; ++i) {
        double t = static_cast<double>(i) / steps;
        if (point_in_rect(s.point_at(t), r)) return true;
    }
    return false;
}

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed segment-segment intersection via orientation predicates.
inline bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1,
                               const Point2& q2) {
    double d1 = cross(q1, q2, p1);
    double d2 = cross(q1, q2, p2);
    double d3 = cross(p1, p2, q1);
    double d4 = cross(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(p1, q1, q2)) return true;
    if (d2 == 0 && on_segment(p2, q1, q2)) return true;
    if (d3 == 0 && on_segment(q1, p1, p2)) return true;
    if (d4 == 0 && on_segment(q2, p1, p2)) return true;
    return false;
}

// Exact closed-set segment/rect test: endpoint membership plus edge-by-edge
// segment intersection. Catches crossings thinner than the sampling step.
inline bool seg_hits_rect_exact(const Segment& s, const Rect& r) {
    if (point_in_rect(s.a, r) || point_in_rect(s.b, r)) return true;
    const Point2 c1{r.min_x(), r.min_y()}, c2{r.max_x(), r.min_y()};
    const Point2 c3{r.max_x(), r.max_y()}, c4{r.min_x(), r.max_y()};
    return segments_intersect(s.a, s.b, c1, c2) || segments_intersect(s.a, s.b, c2, c3) ||
           segments_intersect(s.a, s.b, c3, c4) || segments_intersect(s.a, s.b, c4, c1);
}

inline double point_seg_distance(const Point2& p, const Point2& a, const Point2& b) {
    Point2 d = b - a;
    double l2 = d.x * d.x + d.y * d.y;
    if (l2 == 0.0) return replan::distance(p, a);
    double t = std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / l2, 0.0, 1.0);
    return replan::distance(p, a + d * t);
}

inline double seg_seg_distance(const Point2& a1, const Point2& a2, const Point2& b1,
                               const Point2& b2) {
    if (segments_intersect(a1, a2, b1, b2)) return 0.0;
    return std::min({point_seg_distance(a1, b1, b2), point_seg_distance(a2, b1, b2),
                     point_seg_distance(b1, a1, a2), point_seg_distance(b2, a1, a2)});
}

// Distance from a segment to the rect's boundary (0 when touching it).
inline double seg_rect_boundary_distance(const Segment& s, const Rect& r) {
    const Point2 c1{r.min_x(), r.min_y()}, c2{r.max_x(), r.min_y()};
    const Point2 c3{r.max_x(), r.max_y()}, c4{r.min_x(), r.max_y()};
    return std::min({seg_seg_distance(s.a, s.b, c1, c2), seg_seg_distance(s.a, s.b, c2, c3),
                     seg_seg_distance(s.a, s.b, c3, c4), seg_seg_distance(s.a, s.b, c4, c1)});
}

}  // namespace oracle
