#include "baselines.hpp"

#include <algorithm>

namespace replan {

namespace {

bool seg_free(const Point2& a, const Point2& b, std::span<const Rect> obstacles,
              CollisionCounter& cc) {
    const Segment s{a, b};
    for (const Rect& r : obstacles)
        if (seg_intersects_rect(s, r, cc)) return false;
    return true;
}

// The robot sits mid-edge most ticks, so the extracted tree path often starts
// with waypoints behind it. Cutting straight to the furthest visible waypoint
// keeps the execution path from leading backward or circling a corner.
void head_shortcut(Path& exec, std::span<const Rect> obstacles, CollisionCounter& cc) {
    for (std::size_t i = exec.size(); i-- > 2;) {
        if (seg_free(exec[0], exec[i], obstacles, cc)) {
            exec.erase(exec.begin() + 1, exec.begin() + static_cast<long>(i));
            break;
        }
    }
}

}  // namespace

// ---------------------------------------------------------------- DRRT

DrrtPlanner::DrrtPlanner(const World& w, const BaselineConfig& cfg, std::uint64_t seed,
                         Counters& counters)
    : cfg_(cfg), rng_(seed), counters_(counters), tree_(w.goal) {}

void DrrtPlanner::cache_insert(const Point2& p) {
    if (static_cast<int>(cache_.size()) < cfg_.waypoint_cache_cap) {
        cache_.push_back(p);
    } else {
        cache_[rng_.index(cache_.size())] = p;  // random replacement
    }
}

Point2 DrrtPlanner::draw_sample(const World& w) {
    if (!cache_.empty()) {
        ++stats_.sample_draws;
        if (rng_.chance(cfg_.waypoint_p)) {
            ++stats_.waypoint_draws;
            const Point2& wp = cache_[rng_.index(cache_.size())];
            Point2 q = wp + Point2{rng_.uniform(-cfg_.vicinity, cfg_.vicinity),
                                   rng_.uniform(-cfg_.vicinity, cfg_.vicinity)};
            q.x = std::clamp(q.x, w.bounds.min_x(), w.bounds.max_x());
            q.y = std::clamp(q.y, w.bounds.min_y(), w.bounds.max_y());
            return q;
        }
    }
    return sample(w.bounds, &w.robot_pos, cfg_.rrt.goal_bias, rng_);
}

void DrrtPlanner::plan(const World& w, int budget) {
    const std::vector<Rect> obstacles = known_obstacles(w);

    // trim newly-invalid branches; their states seed the waypoint cache
    TrimOutcome tr = trim_tree(tree_, obstacles, counters_.cc);
    tree_ = std::move(tr.main);
    for (const Point2& p : tr.removed_points) cache_insert(p);
    for (const Tree& orphan : tr.orphans)
        for (const auto& node : orphan.nodes) cache_insert(node.p);

    const double reach = cfg_.rrt.step_size;
    connected_ = false;
    int leaf = -1;

    int near_robot = nearest(tree_, w.robot_pos, counters_.nn);
    if (distance(tree_.nodes[near_robot].p, w.robot_pos) <= reach &&
        seg_free(w.robot_pos, tree_.nodes[near_robot].p, obstacles, counters_.cc)) {
        connected_ = true;
        leaf = near_robot;
    }

    while (!connected_ && budget-- > 0) {
        Point2 q = draw_sample(w);
        auto [res, idx] = extend(tree_, q, cfg_.rrt, obstacles, counters_.cc, counters_.nn);
        if (idx >= 0 && distance(tree_.nodes[idx].p, w.robot_pos) <= reach &&
            seg_free(w.robot_pos, tree_.nodes[idx].p, obstacles, counters_.cc)) {
            connected_ = true;
            leaf = idx;
        }
    }

    exec_.clear();
    if (connected_) {
        Path chain = extract_root_path(tree_, leaf);  // goal .. leaf
        std::reverse(chain.begin(), chain.end());     // leaf .. goal
        exec_.push_back(w.robot_pos);
        for (const Point2& p : chain) {
            if (exec_.size() == 1 && distance(p, w.robot_pos) <= 1e-12) continue;
            exec_.push_back(p);
        }
        head_shortcut(exec_, obstacles, counters_.cc);
    } else if (cfg_.advance_when_disconnected && tree_.size() > 0) {
        int target = nearest(tree_, w.robot_pos, counters_.nn);
        if (distance(tree_.nodes[target].p, w.robot_pos) > 1e-9)
            exec_ = {w.robot_pos, tree_.nodes[target].p};
    }
}

// ---------------------------------------------------------------- MP-RRT

MprrtPlanner::MprrtPlanner(const World& w, const BaselineConfig& cfg, std::uint64_t seed,
                           Counters& counters)
    : cfg_(cfg), rng_(seed), counters_(counters), tree_(w.robot_pos) {}

void MprrtPlanner::forest_push(Tree t) {
    if (t.size() < cfg_.min_subtree) return;
    if (static_cast<int>(forest_.size()) >= cfg_.forest_cap) forest_.pop_front();  // oldest out
    forest_.push_back(std::move(t));
}

// Keeps the main tree rooted at the (possibly moved) robot position.
void MprrtPlanner::sync_root(const World& w, std::span<const Rect> obstacles) {
    if (distance(tree_.root(), w.robot_pos) <= 1e-9) return;
    int n = nearest(tree_, w.robot_pos, counters_.nn);
    double d = distance(tree_.nodes[n].p, w.robot_pos);
    if (n == 0 && d <= cfg_.rrt.step_size) {
        // the robot slid along the root's edge; move the anchor with it and
        // let the next trim pass drop any child edge this invalidates
        tree_.nodes[0].p = w.robot_pos;
        return;
    }
    if (d <= cfg_.rrt.step_size &&
        seg_free(w.robot_pos, tree_.nodes[n].p, obstacles, counters_.cc)) {
        Tree hung = reroot(tree_, n);
        if (d <= 1e-9) {
            tree_ = std::move(hung);
        } else {
            Tree fresh(w.robot_pos);
            fresh.nodes.reserve(hung.size() + 1);
            for (const auto& node : hung.nodes)
                fresh.nodes.push_back({node.p, node.parent + 1});
            fresh.nodes[1].parent = 0;  // old root hangs off the robot
            tree_ = std::move(fresh);
        }
    } else {
        // unreachable from here; park it in the forest and restart at the robot
        forest_push(std::move(tree_));
        tree_ = Tree(w.robot_pos);
    }
}

void MprrtPlanner::plan(const World& w, int budget) {
    const std::vector<Rect> obstacles = known_obstacles(w);

    TrimOutcome tr = trim_tree(tree_, obstacles, counters_.cc);
    tree_ = std::move(tr.main);
    for (Tree& orphan : tr.orphans) forest_push(std::move(orphan));
    for (std::size_t i = 0; i < forest_.size();) {
        TrimOutcome ft = trim_tree(forest_[i], obstacles, counters_.cc);
        if (ft.main.size() >= cfg_.min_subtree) {
            forest_[i] = std::move(ft.main);
            ++i;
        } else {
            forest_.erase(forest_.begin() + static_cast<long>(i));
        }
    }

    sync_root(w, obstacles);

    const double reach = cfg_.rrt.step_size;
    connected_ = false;
    int goal_leaf = -1;

    auto try_connect_goal = [&](int idx) {
        if (idx < 0) return;
        const Point2& p = tree_.nodes[idx].p;
        if (distance(p, w.goal) <= reach && seg_free(p, w.goal, obstacles, counters_.cc)) {
            tree_.nodes.push_back({w.goal, idx});
            goal_leaf = tree_.size() - 1;
            connected_ = true;
        }
    };

    int near_goal = nearest(tree_, w.goal, counters_.nn);
    if (distance(tree_.nodes[near_goal].p, w.goal) <= 1e-12) {
        connected_ = true;
        goal_leaf = near_goal;
    } else {
        try_connect_goal(near_goal);
    }

    while (!connected_ && budget-- > 0) {
        int added = -1;
        if (!forest_.empty()) {
            ++stats_.growth_iters;
            if (rng_.chance(cfg_.reuse_p)) {
                ++stats_.reuse_attempts;
                std::size_t pick = rng_.index(forest_.size());
                const Point2 root = forest_[pick].root();
                auto [res, idx] = extend(tree_, root, cfg_.rrt, obstacles, counters_.cc,
                                         counters_.nn);
                added = idx;
                if (res == ExtendResult::Reached) {
                    // fold the subtree into the main tree at the reached node
                    const Tree& sub = forest_[pick];
                    std::vector<int> map(sub.size(), -1);
                    map[0] = idx;
                    for (int i = 1; i < sub.size(); ++i) {
                        map[i] = tree_.size();
                        tree_.nodes.push_back({sub.nodes[i].p, map[sub.nodes[i].parent]});
                    }
                    forest_.erase(forest_.begin() + static_cast<long>(pick));
                }
                try_connect_goal(added);
                continue;
            }
        }
        Point2 q = sample(w.bounds, &w.goal, cfg_.rrt.goal_bias, rng_);
        auto [res, idx] = extend(tree_, q, cfg_.rrt, obstacles, counters_.cc, counters_.nn);
        try_connect_goal(idx);
    }

    exec_.clear();
    if (connected_) {
        exec_ = extract_root_path(tree_, goal_leaf);  // robot .. goal
        exec_.front() = w.robot_pos;
        head_shortcut(exec_, obstacles, counters_.cc);
    } else if (cfg_.advance_when_disconnected && tree_.size() > 1) {
        int target = nearest(tree_, w.goal, counters_.nn);
        if (target != 0) {
            exec_ = extract_root_path(tree_, target);
            exec_.front() = w.robot_pos;
            head_shortcut(exec_, obstacles, counters_.cc);
        }
    }
}

}  // namespace replan
