#include "rrt.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace replan {

Point2 sample(const Rect& bounds, const Point2* bias_target, double goal_bias, Rng& rng) {
    if (bias_target && rng.chance(goal_bias)) return *bias_target;
    return {rng.uniform(bounds.min_x(), bounds.max_x()),
            rng.uniform(bounds.min_y(), bounds.max_y())};
}

int nearest(const Tree& t, const Point2& q, NnCounter& nn) {
    if (t.empty()) throw std::invalid_argument("nearest: empty tree");
    ++nn.count;
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t.size(); ++i) {
        double d = distance(t.nodes[i].p, q);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

namespace {

// tests the edge against every obstacle, returning the earliest entry t of
// any hit (scanning all obstacles so the collision point nearest q_near wins)
bool edge_blocked(const Segment& edge, std::span<const Rect> obstacles, CollisionCounter& cc,
                  double* first_entry) {
    bool hit = false;
    double t_min = std::numeric_limits<double>::infinity();
    for (const Rect& r : obstacles) {
        if (seg_intersects_rect(edge, r, cc)) {
            hit = true;
            if (auto t = seg_rect_entry(edge, r)) t_min = std::min(t_min, *t);
        }
    }
    if (hit && first_entry) *first_entry = t_min;
    return hit;
}

bool edge_free(const Segment& edge, std::span<const Rect> obstacles, CollisionCounter& cc) {
    return std::none_of(obstacles.begin(), obstacles.end(),
                        [&](const Rect& r) { return seg_intersects_rect(edge, r, cc); });
}

}  // namespace

std::pair<ExtendResult, int> extend(Tree& t, const Point2& q_rand, const RrtParams& params,
                                    std::span<const Rect> obstacles, CollisionCounter& cc,
                                    NnCounter& nn) {
    int near_idx = nearest(t, q_rand, nn);
    const Point2 q_near = t.nodes[near_idx].p;
    double d = distance(q_near, q_rand);
    bool reaches = d <= params.step_size;
    Point2 q_new = reaches ? q_rand : q_near + (q_rand - q_near) * (params.step_size / d);

    double entry_t = 0.0;
    const Segment edge{q_near, q_new};
    if (!edge_blocked(edge, obstacles, cc, &entry_t)) {
        t.nodes.push_back({q_new, near_idx});
        return {reaches ? ExtendResult::Reached : ExtendResult::Added, t.size() - 1};
    }

    // midpoint between the near node and the nearest collision point
    Point2 collision_point = edge.point_at(entry_t);
    Point2 mid = (q_near + collision_point) * 0.5;
    if (distance(q_near, mid) > params.min_edge_frac * params.step_size &&
        edge_free({q_near, mid}, obstacles, cc)) {
        t.nodes.push_back({mid, near_idx});
        return {ExtendResult::Added, t.size() - 1};
    }
    return {ExtendResult::Blocked, -1};
}

std::optional<Path> grow_bidirectional(Tree& t_init, Tree& t_goal, const RrtParams& params,
                                       const Rect& bounds, std::span<const Rect> obstacles,
                                       int budget, Rng& rng, CollisionCounter& cc, NnCounter& nn) {
    if (t_init.empty() || t_goal.empty())
        throw std::invalid_argument("grow_bidirectional: trees must be non-empty");
    const Point2 goal = t_goal.root();
    for (int iter = 0; iter < budget; ++iter) {
        Point2 q = sample(bounds, &goal, params.goal_bias, rng);
        auto [r1, leaf1] = extend(t_init, q, params, obstacles, cc, nn);
        auto [r2, leaf2] = extend(t_goal, q, params, obstacles, cc, nn);
        if (r1 == ExtendResult::Reached && r2 == ExtendResult::Reached) {
            Path p = extract_root_path(t_init, leaf1);
            Path back = extract_root_path(t_goal, leaf2);
            // both end at q; walk the goal half backwards, skipping the duplicate
            for (auto it = back.rbegin() + 1; it != back.rend(); ++it) p.push_back(*it);
            return p;
        }
    }
    return std::nullopt;
}

Path extract_root_path(const Tree& t, int leaf) {
    if (leaf < 0 || leaf >= t.size()) throw std::out_of_range("extract_root_path: bad leaf index");
    Path p;
    for (int i = leaf; i != -1; i = t.nodes[i].parent) p.push_back(t.nodes[i].p);
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace replan
