#include "multistage.hpp"

#include <stdexcept>

namespace replan {

namespace {

bool seg_free(const Point2& a, const Point2& b, std::span<const Rect> obstacles,
              CollisionCounter& cc) {
    const Segment s{a, b};
    for (const Rect& r : obstacles)
        if (seg_intersects_rect(s, r, cc)) return false;
    return true;
}

}  // namespace

bool arc_apply(Path& path, int firstCol, double dev, bool y_axis, std::span<const Rect> obstacles,
               CollisionCounter& cc) {
    const Point2 b = path[firstCol];
    const Point2 c = path[firstCol + 1];
    const Point2 off = y_axis ? Point2{0.0, dev} : Point2{dev, 0.0};
    const Point2 n1 = b + off;
    const Point2 n2 = c + off;
    if (seg_free(b, n1, obstacles, cc) && seg_free(n1, n2, obstacles, cc) &&
        seg_free(n2, c, obstacles, cc)) {
        path.insert(path.begin() + firstCol + 1, {n1, n2});
        return true;
    }
    // drop the second point and retry as a single-point detour
    if (seg_free(b, n1, obstacles, cc) && seg_free(n1, c, obstacles, cc)) {
        path.insert(path.begin() + firstCol + 1, n1);
        return true;
    }
    return false;
}

bool arc(Path& path, int firstCol, double vicinity, std::span<const Rect> obstacles, Rng& rng,
         CollisionCounter& cc) {
    if (firstCol < 0 || firstCol + 1 >= static_cast<int>(path.size()))
        throw std::out_of_range("arc: firstCol out of range");
    double dev = rng.uniform(-vicinity, vicinity);
    bool y_axis = !rng.coin();
    return arc_apply(path, firstCol, dev, y_axis, obstacles, cc);
}

bool mut(Path& path, int idx, double vicinity, std::span<const Rect> obstacles, Rng& rng,
         CollisionCounter& cc) {
    if (idx <= 0 || idx + 1 >= static_cast<int>(path.size()))
        throw std::out_of_range("mut: endpoints are not mutable");
    double dx = rng.uniform(-vicinity, vicinity);
    double dy = rng.uniform(-vicinity, vicinity);
    return mut_apply(path, idx, dx, dy, obstacles, cc);
}

bool mut_apply(Path& path, int idx, double dx, double dy, std::span<const Rect> obstacles,
               CollisionCounter& cc) {
    if (idx <= 0 || idx + 1 >= static_cast<int>(path.size()))
        throw std::out_of_range("mut: endpoints are not mutable");
    const Point2 moved = path[idx] + Point2{dx, dy};
    if (seg_free(path[idx - 1], moved, obstacles, cc) &&
        seg_free(moved, path[idx + 1], obstacles, cc)) {
        path[idx] = moved;
        return true;
    }
    return false;
}

void post_process(Path& path, std::span<const Rect> obstacles, CollisionCounter& cc) {
    if (path.size() < 2) throw std::invalid_argument("post_process: path needs >= 2 points");
    // repeated greedy passes until a fixpoint: a deletion ahead of i can open
    // a skip behind it, so a single pass is not idempotent
    bool changed = true;
    while (changed) {
        changed = false;
        int i = 0;
        while (i < static_cast<int>(path.size()) - 2) {
            if (seg_free(path[i], path[i + 2], obstacles, cc)) {
                path.erase(path.begin() + i + 1);
                changed = true;
            } else {
                ++i;
            }
        }
    }
}

MultiStagePlanner::MultiStagePlanner(const World& w, const MultiStageConfig& cfg,
                                     std::uint64_t seed, Counters& counters)
    : cfg_(cfg), rng_(seed), counters_(counters), t_init_(w.robot_pos), t_goal_(w.goal) {}

void MultiStagePlanner::restart(const World& w) {
    t_init_ = Tree(w.robot_pos);
    t_goal_ = Tree(w.goal);
    path_.clear();
    phase_ = Phase::Seeding;
    consecutive_failures_ = 0;
    ++restarts_;
}

void MultiStagePlanner::plan(const World& w, int budget) {
    const std::vector<Rect> obstacles = known_obstacles(w);
    int budget_left = budget;
    while (budget_left > 0) {
        if (phase_ == Phase::Seeding) {
            auto found = grow_bidirectional(t_init_, t_goal_, cfg_.rrt, w.bounds, obstacles,
                                            budget_left, rng_, counters_.cc, counters_.nn);
            if (!found) return;  // slice exhausted, keep seeding next tick
            path_ = *found;
            path_.front() = w.robot_pos;
            post_process(path_, obstacles, counters_.cc);
            phase_ = Phase::Navigating;
            consecutive_failures_ = 0;
            return;
        }

        if (path_.size() < 2) return;  // at goal (or nothing left to repair)
        --budget_left;
        auto rep = path_feasible(path_, obstacles, counters_.cc);
        if (rep.free) {
            consecutive_failures_ = 0;
            post_process(path_, obstacles, counters_.cc);
            return;
        }

        arc(path_, rep.first_blocked_segment, cfg_.vicinity, obstacles, rng_, counters_.cc);
        int mut_seg = rep.first_blocked_segment;
        bool still_blocked = true;
        if (!cfg_.mut_always) {
            auto rep2 = path_feasible(path_, obstacles, counters_.cc);
            still_blocked = !rep2.free;
            mut_seg = rep2.first_blocked_segment;
        }
        if (cfg_.mut_always || still_blocked) {
            int idx = (mut_seg == 0) ? 1 : mut_seg;  // robot endpoint is immutable
            if (idx > 0 && idx + 1 < static_cast<int>(path_.size()))
                mut(path_, idx, cfg_.vicinity, obstacles, rng_, counters_.cc);
        }
        post_process(path_, obstacles, counters_.cc);

        auto end_rep = path_feasible(path_, obstacles, counters_.cc);
        if (end_rep.free) {
            consecutive_failures_ = 0;
        } else if (++consecutive_failures_ >= cfg_.stuck_window) {
            restart(w);
        }
    }
}

}  // namespace replan
