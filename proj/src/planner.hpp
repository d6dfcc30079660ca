#pragma once

#include <memory>
#include <string>

#include "geometry.hpp"
#include "rrt.hpp"
#include "world.hpp"

namespace replan {

// Per-trial cost counters shared by all planner stages.
struct Counters {
    CollisionCounter cc;
    NnCounter nn;
};

class Planner {
public:
    virtual ~Planner() = default;

    // One planning slice of `budget` iterations against the current world.
    virtual void plan(const World& w, int budget) = 0;

    // Path the robot should execute this tick; empty means hold position.
    // advance_robot mutates it in place as waypoints are consumed.
    virtual Path& active_path() = 0;

    virtual int restarts() const { return 0; }
};

}  // namespace replan
