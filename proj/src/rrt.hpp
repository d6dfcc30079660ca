#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace replan {

struct NnCounter {
    long long count = 0;
};

struct Tree {
    struct Node {
        Point2 p;
        int parent;  // -1 for root; always < own index
    };
    std::vector<Node> nodes;

    Tree() = default;
    explicit Tree(const Point2& root) { nodes.push_back({root, -1}); }

    bool empty() const { return nodes.empty(); }
    int size() const { return static_cast<int>(nodes.size()); }
    const Point2& root() const { return nodes.front().p; }
};

struct RrtParams {
    double step_size = 1.0;       // epsilon
    double goal_bias = 0.05;
    double min_edge_frac = 1e-3;  // midpoint edges shorter than this * epsilon are dropped
};

// With probability goal_bias returns *bias_target (when given), else uniform
// in bounds.
Point2 sample(const Rect& bounds, const Point2* bias_target, double goal_bias, Rng& rng);

// Linear scan; ties broken by lowest index. Counts one N.N. lookup.
int nearest(const Tree& t, const Point2& q, NnCounter& nn);

enum class ExtendResult { Reached, Added, Blocked };

// Steps epsilon from the nearest node toward q_rand. On a blocked edge, falls
// back to the midpoint between the near node and the edge's first collision
// point, when that shorter edge is itself free and long enough.
std::pair<ExtendResult, int> extend(Tree& t, const Point2& q_rand, const RrtParams& params,
                                    std::span<const Rect> obstacles, CollisionCounter& cc,
                                    NnCounter& nn);

// One shared sample per iteration, extended into both trees; when both reach
// the sample the trees are merged into a root-to-root path.
std::optional<Path> grow_bidirectional(Tree& t_init, Tree& t_goal, const RrtParams& params,
                                       const Rect& bounds, std::span<const Rect> obstacles,
                                       int budget, Rng& rng, CollisionCounter& cc, NnCounter& nn);

Path extract_root_path(const Tree& t, int leaf);

}  // namespace replan
