#pragma once

#include <deque>

#include "planner.hpp"
#include "tree_ops.hpp"

namespace replan {

struct BaselineConfig {
    RrtParams rrt;
    double vicinity = 4.0;       // waypoint-vicinity half side for DRRT sampling
    double waypoint_p = 0.4;     // DRRT: probability of sampling near a cached waypoint
    int waypoint_cache_cap = 100;
    double reuse_p = 0.1;        // MP-RRT: probability of a forest reconnection attempt
    int forest_cap = 25;
    int min_subtree = 5;
    bool advance_when_disconnected = false;  // adv vs noadv
};

// Observable sampling statistics, asserted by the parameter-fidelity tests.
struct BaselineStats {
    long long sample_draws = 0;    // DRRT sampling decisions with a non-empty cache
    long long waypoint_draws = 0;  // of those, draws taken from the waypoint cache
    long long growth_iters = 0;    // MP-RRT growth iterations with a non-empty forest
    long long reuse_attempts = 0;  // of those, forest reconnection attempts
};

// Goal-rooted single tree; trims newly-invalid branches each tick and regrows
// with sampling biased toward the trimmed regions via a waypoint cache.
class DrrtPlanner : public Planner {
public:
    DrrtPlanner(const World& w, const BaselineConfig& cfg, std::uint64_t seed, Counters& counters);

    void plan(const World& w, int budget) override;
    Path& active_path() override { return exec_; }

    const BaselineStats& stats() const { return stats_; }
    const Tree& tree() const { return tree_; }
    const std::vector<Point2>& waypoint_cache() const { return cache_; }
    bool connected() const { return connected_; }

private:
    Point2 draw_sample(const World& w);
    void cache_insert(const Point2& p);

    BaselineConfig cfg_;
    Rng rng_;
    Counters& counters_;
    Tree tree_;
    std::vector<Point2> cache_;
    Path exec_;
    BaselineStats stats_;
    bool connected_ = false;
};

// Robot-rooted main tree plus a bounded forest of detached valid subtrees
// that reconnection attempts fold back into the main tree.
class MprrtPlanner : public Planner {
public:
    MprrtPlanner(const World& w, const BaselineConfig& cfg, std::uint64_t seed, Counters& counters);

    void plan(const World& w, int budget) override;
    Path& active_path() override { return exec_; }

    const BaselineStats& stats() const { return stats_; }
    const Tree& tree() const { return tree_; }
    const std::deque<Tree>& forest() const { return forest_; }
    bool connected() const { return connected_; }

private:
    void forest_push(Tree t);
    void sync_root(const World& w, std::span<const Rect> obstacles);

    BaselineConfig cfg_;
    Rng rng_;
    Counters& counters_;
    Tree tree_;
    std::deque<Tree> forest_;
    Path exec_;
    BaselineStats stats_;
    bool connected_ = false;
};

}  // namespace replan
