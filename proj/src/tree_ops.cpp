#include "tree_ops.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace replan {

namespace {

bool point_blocked(const Point2& p, std::span<const Rect> obstacles, CollisionCounter& cc) {
    const Segment degenerate{p, p};
    for (const Rect& r : obstacles)
        if (seg_intersects_rect(degenerate, r, cc)) return true;
    return false;
}

bool edge_blocked(const Point2& a, const Point2& b, std::span<const Rect> obstacles,
                  CollisionCounter& cc) {
    const Segment s{a, b};
    for (const Rect& r : obstacles)
        if (seg_intersects_rect(s, r, cc)) return true;
    return false;
}

}  // namespace

TrimOutcome trim_tree(const Tree& t, std::span<const Rect> obstacles, CollisionCounter& cc) {
    TrimOutcome out;
    if (t.empty()) return out;

    const int n = t.size();
    std::vector<char> alive(n, 0);
    std::vector<int> comp(n, -1);  // -1 dead, 0 main, >0 orphan component ids
    std::vector<int> new_index(n, -1);
    int next_comp = 1;

    for (int i = 0; i < n; ++i) {
        const auto& node = t.nodes[i];
        alive[i] = (i == 0) || !point_blocked(node.p, obstacles, cc);
        if (!alive[i]) {
            out.removed_points.push_back(node.p);
            continue;
        }
        if (i == 0) {
            comp[i] = 0;
            continue;
        }
        bool attached = alive[node.parent] && comp[node.parent] >= 0 &&
                        !edge_blocked(t.nodes[node.parent].p, node.p, obstacles, cc);
        comp[i] = attached ? comp[node.parent] : next_comp++;
    }

    std::vector<Tree> parts(next_comp);
    for (int i = 0; i < n; ++i) {
        if (comp[i] < 0) continue;
        Tree& dst = parts[comp[i]];
        int parent = t.nodes[i].parent;
        int new_parent = (parent >= 0 && comp[parent] == comp[i]) ? new_index[parent] : -1;
        new_index[i] = dst.size();
        dst.nodes.push_back({t.nodes[i].p, new_parent});
    }

    out.main = std::move(parts[0]);
    for (int c = 1; c < next_comp; ++c) out.orphans.push_back(std::move(parts[c]));
    return out;
}

Tree reroot(const Tree& t, int new_root) {
    if (new_root < 0 || new_root >= t.size()) throw std::out_of_range("reroot: bad node index");
    const int n = t.size();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        int p = t.nodes[i].parent;
        if (p >= 0) {
            adj[p].push_back(i);
            adj[i].push_back(p);
        }
    }
    Tree out;
    out.nodes.reserve(n);
    std::vector<int> new_index(n, -1);
    std::queue<int> frontier;
    frontier.push(new_root);
    new_index[new_root] = 0;
    out.nodes.push_back({t.nodes[new_root].p, -1});
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (int nb : adj[cur]) {
            if (new_index[nb] >= 0) continue;
            new_index[nb] = out.size();
            out.nodes.push_back({t.nodes[nb].p, new_index[cur]});
            frontier.push(nb);
        }
    }
    return out;
}

}  // namespace replan
