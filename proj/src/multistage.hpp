#pragma once

#include "planner.hpp"

namespace replan {

struct MultiStageConfig {
    RrtParams rrt;
    double vicinity = 4.0;    // offset draw range for arc/mut
    int stuck_window = 50;    // consecutive failed repairs before RRT restart
    bool mut_always = false;  // apply mut even when arc already repaired the path
};

// Informed local search operators. All three preserve path endpoints and only
// modify the path under feasibility checks of every touched segment.

// Inserts a square detour (two points, or one as fallback) around the
// colliding segment path[firstCol] -> path[firstCol+1]. Returns true when the
// path changed.
bool arc(Path& path, int firstCol, double vicinity, std::span<const Rect> obstacles, Rng& rng,
         CollisionCounter& cc);

// Deterministic cores with explicit offsets (the random wrappers above draw
// dev/axis and delegate here).
bool arc_apply(Path& path, int firstCol, double dev, bool y_axis, std::span<const Rect> obstacles,
               CollisionCounter& cc);
bool mut_apply(Path& path, int idx, double dx, double dy, std::span<const Rect> obstacles,
               CollisionCounter& cc);

// Perturbs path[idx] by a uniform offset in both axes; accepted only when the
// segments before and after the moved point stay collision free.
bool mut(Path& path, int idx, double vicinity, std::span<const Rect> obstacles, Rng& rng,
         CollisionCounter& cc);

// Greedy shortcut pass: repeatedly deletes path[i+1] while the skip segment
// path[i] -> path[i+2] is free; i advances only when a skip fails.
void post_process(Path& path, std::span<const Rect> obstacles, CollisionCounter& cc);

class MultiStagePlanner : public Planner {
public:
    MultiStagePlanner(const World& w, const MultiStageConfig& cfg, std::uint64_t seed,
                      Counters& counters);

    void plan(const World& w, int budget) override;
    Path& active_path() override { return path_; }
    int restarts() const override { return restarts_; }

    bool navigating() const { return phase_ == Phase::Navigating; }
    int consecutive_failures() const { return consecutive_failures_; }

private:
    enum class Phase { Seeding, Navigating };

    void restart(const World& w);

    MultiStageConfig cfg_;
    Rng rng_;
    Counters& counters_;
    Phase phase_ = Phase::Seeding;
    Tree t_init_;
    Tree t_goal_;
    Path path_;
    int consecutive_failures_ = 0;
    int restarts_ = 0;
};

}  // namespace replan
