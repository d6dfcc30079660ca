#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bench.hpp"
#include "multistage.hpp"
#include "world.hpp"

namespace py = pybind11;
using namespace replan;

namespace {

py::tuple point_tuple(const Point2& p) { return py::make_tuple(p.x, p.y); }

py::list path_list(const Path& path) {
    py::list out;
    for (const Point2& p : path) out.append(point_tuple(p));
    return out;
}

Path path_from(const std::vector<std::pair<double, double>>& pts) {
    Path p;
    for (auto [x, y] : pts) p.push_back({x, y});
    return p;
}

std::vector<Rect> rects_from(
    const std::vector<std::tuple<double, double, double, double>>& rows) {
    std::vector<Rect> obs;
    for (auto [cx, cy, hw, hh] : rows) obs.push_back({{cx, cy}, hw, hh});
    return obs;
}

// Owns the world, planner, and counters for a scripted simulation run.
class Simulation {
public:
    Simulation(const std::string& map_json, const std::string& planner, std::uint64_t seed)
        : world_(load_map(map_json, mix_seed(seed, 0x1))),
          planner_(make_planner(planner, nlohmann::json::object(), world_, mix_seed(seed, 0x2),
                                counters_)) {}

    // One world update, one planning slice, one robot move. Returns True once
    // the robot stands on the goal.
    bool step(int budget) {
        update_world(world_, 1);
        planner_->plan(world_, budget);
        traversed_ += advance_robot(world_, planner_->active_path(), 1, exec_cc_);
        return distance(world_.robot_pos, world_.goal) <= 1e-9;
    }

    py::tuple robot() const { return point_tuple(world_.robot_pos); }
    py::tuple goal() const { return point_tuple(world_.goal); }
    py::list path() const { return path_list(planner_->active_path()); }
    long long clock() const { return world_.clock; }
    long long cc() const { return counters_.cc.count; }
    long long nn() const { return counters_.nn.count; }
    int restarts() const { return planner_->restarts(); }
    double traversed() const { return traversed_; }

private:
    Counters counters_;
    CollisionCounter exec_cc_;
    World world_;
    std::unique_ptr<Planner> planner_;
    double traversed_ = 0.0;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "2D dynamic replanning core";

    m.def(
        "segment_hits_rect",
        [](double ax, double ay, double bx, double by, double cx, double cy, double hw,
           double hh) {
            CollisionCounter cc;
            return seg_intersects_rect({{ax, ay}, {bx, by}}, {{cx, cy}, hw, hh}, cc);
        },
        "Closed-set intersection test between a segment and an axis-aligned rect");

    m.def(
        "path_is_free",
        [](const std::vector<std::pair<double, double>>& pts,
           const std::vector<std::tuple<double, double, double, double>>& obstacles) {
            CollisionCounter cc;
            auto rep = path_feasible(path_from(pts), rects_from(obstacles), cc);
            return py::make_tuple(rep.free, rep.first_blocked_segment);
        },
        "Returns (free, first_blocked_segment) for a polyline against rect obstacles");

    m.def(
        "shortcut",
        [](const std::vector<std::pair<double, double>>& pts,
           const std::vector<std::tuple<double, double, double, double>>& obstacles) {
            Path p = path_from(pts);
            CollisionCounter cc;
            post_process(p, rects_from(obstacles), cc);
            return path_list(p);
        },
        "Greedy shortcut pass over a polyline");

    m.def(
        "run_trial",
        [](const std::string& map_path, const std::string& planner, std::uint64_t seed,
           long long cutoff, int budget) {
            TrialSpec spec;
            spec.planner = planner;
            spec.map_path = map_path;
            spec.seed = seed;
            spec.cutoff_ticks = cutoff;
            spec.budget_per_tick = budget;
            TrialResult r = run_trial(spec);
            py::dict out;
            out["success"] = r.success;
            out["ticks"] = r.ticks_elapsed;
            out["cc"] = r.cc;
            out["nn"] = r.nn;
            out["length"] = r.path_length_traversed;
            out["restarts"] = r.restarts;
            return out;
        },
        py::arg("map_path"), py::arg("planner"), py::arg("seed"), py::arg("cutoff") = 20000,
        py::arg("budget") = 300, "Runs one seeded trial and returns its metrics");

    py::class_<Simulation>(m, "Simulation")
        .def(py::init<const std::string&, const std::string&, std::uint64_t>(),
             py::arg("map_json"), py::arg("planner"), py::arg("seed"))
        .def("step", &Simulation::step, py::arg("budget") = 300)
        .def_property_readonly("robot", &Simulation::robot)
        .def_property_readonly("goal", &Simulation::goal)
        .def_property_readonly("path", &Simulation::path)
        .def_property_readonly("clock", &Simulation::clock)
        .def_property_readonly("cc", &Simulation::cc)
        .def_property_readonly("nn", &Simulation::nn)
        .def_property_readonly("restarts", &Simulation::restarts)
        .def_property_readonly("traversed", &Simulation::traversed);
}
