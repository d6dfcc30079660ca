#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"

namespace replan {

struct MovingObstacle {
    Rect shape;
    Point2 velocity;  // world-units per tick
};

struct HiddenObstacle {
    Rect shape;
    bool revealed = false;
    double reveal_radius = 0.0;
};

struct World {
    Rect bounds;
    std::vector<Rect> walls;
    std::vector<MovingObstacle> movers;
    std::vector<HiddenObstacle> hidden;
    Point2 robot_pos;
    Point2 goal;
    double robot_speed = 1.0;
    double robot_size = 1.0;
    long long clock = 0;

    // optional mover heading re-randomization (off by default); rng state is
    // part of the world so updates stay deterministic
    int rerandomize_every = 0;
    std::uint64_t motion_seed = 0;
};

class MapError : public std::runtime_error {
public:
    explicit MapError(const std::string& what) : std::runtime_error(what) {}
};

// Parses the map schema and materializes the world: mover positions, headings
// and speeds are drawn here, from seed_override if given, else from the
// document's seed field. All later world updates are deterministic.
World load_map(const std::string& json_text, std::optional<std::uint64_t> seed_override = {});
World load_map_file(const std::string& path, std::optional<std::uint64_t> seed_override = {});

// Advances movers (specular reflection off bounds and walls), reveals hidden
// obstacles near the robot, bumps the clock.
void update_world(World& w, int dt);

// walls + mover shapes + revealed hidden shapes
std::vector<Rect> known_obstacles(const World& w);

// Moves the robot along the path polyline, up to robot_speed*dt, stopping
// before the first sub-segment that collides with a known obstacle. Consumed
// waypoints are dropped; path[0] tracks the robot. Returns distance moved.
// Collision checks here are execution checks, counted separately from the
// planner's C.C. metric.
double advance_robot(World& w, Path& path, int dt, CollisionCounter& exec_counter);

}  // namespace replan
