#pragma once

#include <span>
#include <vector>

#include "rrt.hpp"

namespace replan {

struct TrimOutcome {
    Tree main;                          // component still attached to the old root
    std::vector<Tree> orphans;          // detached but still-valid components
    std::vector<Point2> removed_points; // points of nodes deleted outright
};

// Removes nodes whose point lies inside an obstacle or whose parent edge now
// collides; severed-but-valid subtrees come back as orphan trees rooted at
// their topmost surviving node. The root node itself is never deleted.
TrimOutcome trim_tree(const Tree& t, std::span<const Rect> obstacles, CollisionCounter& cc);

// Re-hangs the tree from new_root, reversing parent links along the way;
// node order is rebuilt so the parent-index < index invariant holds.
Tree reroot(const Tree& t, int new_root);

}  // namespace replan
