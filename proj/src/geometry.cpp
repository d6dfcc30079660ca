#include "geometry.hpp"

#include <algorithm>
#include <limits>

namespace replan {

namespace {

// Liang-Barsky slab clip against the closed rect. Returns the [t0, t1]
// parameter interval of the segment inside the rect, or nullopt.
std::optional<std::pair<double, double>> clip(const Segment& seg, const Rect& r) {
    double t0 = 0.0, t1 = 1.0;
    const double d[2] = {seg.b.x - seg.a.x, seg.b.y - seg.a.y};
    const double a[2] = {seg.a.x, seg.a.y};
    const double lo[2] = {r.min_x(), r.min_y()};
    const double hi[2] = {r.max_x(), r.max_y()};
    for (int axis = 0; axis < 2; ++axis) {
        if (d[axis] == 0.0) {
            if (a[axis] < lo[axis] || a[axis] > hi[axis]) return std::nullopt;
        } else {
            double ta = (lo[axis] - a[axis]) / d[axis];
            double tb = (hi[axis] - a[axis]) / d[axis];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
            if (t0 > t1) return std::nullopt;
        }
    }
    return std::make_pair(t0, t1);
}

}  // namespace

bool seg_intersects_rect(const Segment& seg, const Rect& r, CollisionCounter& counter) {
    ++counter.count;
    return clip(seg, r).has_value();
}

std::optional<double> seg_rect_entry(const Segment& seg, const Rect& r) {
    auto iv = clip(seg, r);
    if (!iv) return std::nullopt;
    return iv->first;
}

FeasibilityReport path_feasible(const Path& path, std::span<const Rect> obstacles,
                                CollisionCounter& counter) {
    if (path.size() < 2) throw std::invalid_argument("path_feasible: path needs >= 2 points");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Segment seg{path[i], path[i + 1]};
        for (const Rect& r : obstacles) {
            if (seg_intersects_rect(seg, r, counter)) {
                return {false, static_cast<int>(i)};
            }
        }
    }
    return {true, -1};
}

double path_length(const Path& path) {
    if (path.empty()) throw std::invalid_argument("path_length: empty path");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) total += distance(path[i], path[i + 1]);
    return total;
}

}  // namespace replan
