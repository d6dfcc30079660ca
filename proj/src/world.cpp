#include "world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace replan {

namespace {

using nlohmann::json;

bool rects_overlap(const Rect& a, const Rect& b) {
    return a.min_x() <= b.max_x() && a.max_x() >= b.min_x() &&
           a.min_y() <= b.max_y() && a.max_y() >= b.min_y();
}

bool hits_any_wall(const Rect& shape, const std::vector<Rect>& walls) {
    return std::any_of(walls.begin(), walls.end(),
                       [&](const Rect& w) { return rects_overlap(shape, w); });
}

double point_rect_distance(const Point2& p, const Rect& r) {
    double dx = std::max({r.min_x() - p.x, 0.0, p.x - r.max_x()});
    double dy = std::max({r.min_y() - p.y, 0.0, p.y - r.max_y()});
    return std::hypot(dx, dy);
}

Point2 parse_point(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw MapError(field + ": expected [x, y]");
    Point2 p{j[0].get<double>(), j[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw MapError(field + ": non-finite coordinate");
    return p;
}

const json& require(const json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw MapError(ctx + ": missing field '" + key + "'");
    return *it;
}

// mirror x into [lo, hi], flipping *v on each reflection
void reflect_axis(double& x, double& v, double lo, double hi) {
    if (lo >= hi) {  // no room to move on this axis
        x = (lo + hi) / 2.0;
        return;
    }
    for (int guard = 0; guard < 64; ++guard) {
        if (x < lo) {
            x = 2.0 * lo - x;
            v = -v;
        } else if (x > hi) {
            x = 2.0 * hi - x;
            v = -v;
        } else {
            return;
        }
    }
    x = std::clamp(x, lo, hi);
}

}  // namespace

World load_map(const std::string& json_text, std::optional<std::uint64_t> seed_override) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw MapError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MapError("map document must be a JSON object");

    World w;
    const json& bounds = require(doc, "bounds", "map");
    if (!bounds.is_array() || bounds.size() != 2) throw MapError("bounds: expected [w, h]");
    double bw = bounds[0].get<double>(), bh = bounds[1].get<double>();
    if (!(bw > 0.0) || !(bh > 0.0)) throw MapError("bounds: dimensions must be positive");
    w.bounds = Rect{{bw / 2.0, bh / 2.0}, bw / 2.0, bh / 2.0};

    const json& robot = require(doc, "robot", "map");
    w.robot_pos = parse_point(require(robot, "start", "robot"), "robot.start");
    w.robot_speed = require(robot, "speed", "robot").get<double>();
    w.robot_size = require(robot, "size", "robot").get<double>();
    if (!(w.robot_speed > 0.0)) throw MapError("robot.speed: must be positive");
    if (!(w.robot_size > 0.0)) throw MapError("robot.size: must be positive");
    w.goal = parse_point(require(doc, "goal", "map"), "goal");

    if (!w.bounds.contains(w.robot_pos)) throw MapError("robot.start: outside bounds");
    if (!w.bounds.contains(w.goal)) throw MapError("goal: outside bounds");

    if (doc.contains("walls")) {
        if (!doc["walls"].is_array()) throw MapError("walls: expected array");
        for (const auto& jw : doc["walls"]) {
            Point2 c = parse_point(require(jw, "center", "wall"), "wall.center");
            const json& half = require(jw, "half", "wall");
            if (!half.is_array() || half.size() != 2) throw MapError("wall.half: expected [hw, hh]");
            Rect r{c, half[0].get<double>(), half[1].get<double>()};
            if (!(r.half_w > 0.0) || !(r.half_h > 0.0)) throw MapError("wall.half: must be positive");
            w.walls.push_back(r);
        }
    }
    for (const Rect& wall : w.walls) {
        if (wall.contains(w.robot_pos)) throw MapError("robot.start: inside a wall");
        if (wall.contains(w.goal)) throw MapError("goal: inside a wall");
    }

    std::uint64_t seed = 0;
    if (seed_override) {
        seed = *seed_override;
    } else if (doc.contains("seed")) {
        seed = doc["seed"].get<std::uint64_t>();
    }
    w.motion_seed = seed;
    Rng rng(mix_seed(seed, 0x70a1));

    if (doc.contains("movers")) {
        const json& jm = doc["movers"];
        int count = require(jm, "count", "movers").get<int>();
        if (count < 0) throw MapError("movers.count: must be >= 0");
        double size_factor = jm.value("size_factor", 1.0);
        double sp_lo = 0.10, sp_hi = 0.55;
        if (jm.contains("speed_range")) {
            const json& sr = jm["speed_range"];
            if (!sr.is_array() || sr.size() != 2) throw MapError("movers.speed_range: expected [lo, hi]");
            sp_lo = sr[0].get<double>();
            sp_hi = sr[1].get<double>();
        }
        if (jm.contains("placement_seed_field")) {
            std::string field = jm["placement_seed_field"].get<std::string>();
            if (!seed_override && doc.contains(field)) seed = doc[field].get<std::uint64_t>();
        }
        double half = size_factor * w.robot_size;
        for (int i = 0; i < count; ++i) {
            Rect shape{{0, 0}, half, half};
            bool placed = false;
            for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
                shape.center.x = rng.uniform(w.bounds.min_x() + half, w.bounds.max_x() - half);
                shape.center.y = rng.uniform(w.bounds.min_y() + half, w.bounds.max_y() - half);
                placed = !shape.contains(w.robot_pos) && !hits_any_wall(shape, w.walls);
            }
            if (!placed) throw MapError("movers: could not place mover clear of start and walls");
            if (shape.contains(w.robot_pos)) throw MapError("movers: mover overlaps start");
            double speed = rng.uniform(sp_lo, sp_hi) * w.robot_speed;
            double heading = rng.uniform(0.0, 2.0 * std::numbers::pi);
            w.movers.push_back({shape, {speed * std::cos(heading), speed * std::sin(heading)}});
        }
        w.rerandomize_every = jm.value("rerandomize_every", 0);
    }

    if (doc.contains("hidden")) {
        if (!doc["hidden"].is_array()) throw MapError("hidden: expected array");
        for (const auto& jh : doc["hidden"]) {
            Point2 c = parse_point(require(jh, "center", "hidden"), "hidden.center");
            double f = require(jh, "size_factor", "hidden").get<double>();
            if (!(f > 0.0)) throw MapError("hidden.size_factor: must be positive");
            double half = f * w.robot_size;
            double reveal = jh.value("reveal_radius", 3.0 * w.robot_size);
            w.hidden.push_back({Rect{c, half, half}, false, reveal});
        }
    }
    return w;
}

World load_map_file(const std::string& path, std::optional<std::uint64_t> seed_override) {
    std::ifstream in(path);
    if (!in) throw MapError("cannot open map file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_map(ss.str(), seed_override);
}

void update_world(World& w, int dt) {
    if (dt < 1) throw std::invalid_argument("update_world: dt must be >= 1");
    for (int step = 0; step < dt; ++step) {
        ++w.clock;
        if (w.rerandomize_every > 0 && w.clock % w.rerandomize_every == 0) {
            for (std::size_t i = 0; i < w.movers.size(); ++i) {
                auto& m = w.movers[i];
                double speed = m.velocity.norm();
                Rng hr(mix_seed(w.motion_seed ^ static_cast<std::uint64_t>(w.clock), i));
                double heading = hr.uniform(0.0, 2.0 * std::numbers::pi);
                m.velocity = {speed * std::cos(heading), speed * std::sin(heading)};
            }
        }
        for (auto& m : w.movers) {
            double nx = m.shape.center.x + m.velocity.x;
            double ny = m.shape.center.y + m.velocity.y;
            double vx = m.velocity.x, vy = m.velocity.y;
            reflect_axis(nx, vx, w.bounds.min_x() + m.shape.half_w, w.bounds.max_x() - m.shape.half_w);
            reflect_axis(ny, vy, w.bounds.min_y() + m.shape.half_h, w.bounds.max_y() - m.shape.half_h);
            // specular bounce off static walls, resolved per axis
            Rect trial = m.shape;
            trial.center = {nx, m.shape.center.y};
            if (hits_any_wall(trial, w.walls)) {
                vx = -vx;
                nx = m.shape.center.x;
            }
            trial.center = {nx, ny};
            if (hits_any_wall(trial, w.walls)) {
                vy = -vy;
                ny = m.shape.center.y;
            }
            m.shape.center = {nx, ny};
            m.velocity = {vx, vy};
        }
        for (auto& h : w.hidden) {
            if (!h.revealed && point_rect_distance(w.robot_pos, h.shape) <= h.reveal_radius)
                h.revealed = true;
        }
    }
}

std::vector<Rect> known_obstacles(const World& w) {
    std::vector<Rect> out = w.walls;
    out.reserve(w.walls.size() + w.movers.size() + w.hidden.size());
    for (const auto& m : w.movers) out.push_back(m.shape);
    for (const auto& h : w.hidden)
        if (h.revealed) out.push_back(h.shape);
    return out;
}

double advance_robot(World& w, Path& path, int dt, CollisionCounter& exec_counter) {
    if (path.empty()) return 0.0;
    if (distance(path.front(), w.robot_pos) > 1e-9)
        throw std::invalid_argument("advance_robot: path[0] is not the robot position");
    const std::vector<Rect> obstacles = known_obstacles(w);
    double remaining = w.robot_speed * dt;
    double moved = 0.0;
    Point2 robot = w.robot_pos;
    while (remaining > 1e-12 && path.size() >= 2) {
        double seg_len = distance(robot, path[1]);
        if (seg_len <= 1e-12) {
            path.erase(path.begin());
            path.front() = robot;
            continue;
        }
        double d = std::min(remaining, seg_len);
        Point2 target = robot + (path[1] - robot) * (d / seg_len);
        Segment hop{robot, target};
        bool blocked = false;
        for (const Rect& r : obstacles) {
            if (seg_intersects_rect(hop, r, exec_counter)) {
                blocked = true;
                break;
            }
        }
        if (blocked) break;  // wait and replan
        robot = target;
        moved += d;
        remaining -= d;
        if (d >= seg_len - 1e-12) {
            path.erase(path.begin());
        }
        path.front() = robot;
    }
    w.robot_pos = robot;
    if (!path.empty()) path.front() = robot;
    return moved;
}

}  // namespace replan
