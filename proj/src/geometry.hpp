#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace replan {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Point2& a, const Point2& b) { return (b - a).norm(); }

struct Segment {
    Point2 a;
    Point2 b;

    double length() const { return distance(a, b); }
    Point2 point_at(double t) const { return a + (b - a) * t; }
};

// Axis-aligned rectangle; all obstacles in this toolkit are rects.
struct Rect {
    Point2 center;
    double half_w = 0.0;
    double half_h = 0.0;

    double min_x() const { return center.x - half_w; }
    double max_x() const { return center.x + half_w; }
    double min_y() const { return center.y - half_h; }
    double max_y() const { return center.y + half_h; }

    // closed-set membership: boundary counts as inside
    bool contains(const Point2& p) const {
        return p.x >= min_x() && p.x <= max_x() && p.y >= min_y() && p.y <= max_y();
    }
};

struct CollisionCounter {
    long long count = 0;
};

// One increment per segment-vs-rect test; this is the C.C. accounting unit
// used by every planner in the toolkit.
bool seg_intersects_rect(const Segment& seg, const Rect& r, CollisionCounter& counter);

// Entry parameter t in [0,1] where the segment first enters the closed rect,
// or nullopt if disjoint. Does not count as a collision check on its own; the
// caller pairs it with seg_intersects_rect.
std::optional<double> seg_rect_entry(const Segment& seg, const Rect& r);

using Path = std::vector<Point2>;

struct FeasibilityReport {
    bool free = true;
    int first_blocked_segment = -1;  // index i of segment p_i -> p_{i+1}, robot end first
};

// Scans segments from the robot end and stops at the first colliding one, so
// first_blocked_segment is the collision closest to the robot.
FeasibilityReport path_feasible(const Path& path, std::span<const Rect> obstacles,
                                CollisionCounter& counter);

double path_length(const Path& path);

}  // namespace replan
