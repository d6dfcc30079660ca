#include "bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <thread>

#include "baselines.hpp"
#include "multistage.hpp"
#include "trace.hpp"

namespace replan {

namespace {

using nlohmann::json;

RrtParams rrt_params_for(const World& w, const json& params) {
    RrtParams p;
    p.step_size = params.value("step_factor", 2.0) * w.robot_size;
    p.goal_bias = params.value("goal_bias", 0.05);
    p.min_edge_frac = params.value("min_edge_frac", 1e-3);
    if (!(p.step_size > 0.0)) throw ConfigError("step_factor must be positive");
    if (p.goal_bias < 0.0 || p.goal_bias > 1.0) throw ConfigError("goal_bias must be in [0,1]");
    return p;
}

std::string map_label(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::unique_ptr<Planner> make_planner(const std::string& name, const json& params, const World& w,
                                      std::uint64_t seed, Counters& counters) {
    if (name == "multistage") {
        MultiStageConfig cfg;
        cfg.rrt = rrt_params_for(w, params);
        cfg.vicinity = params.value("vicinity_factor", 4.0) * w.robot_size;
        cfg.stuck_window = params.value("stuck_window", 50);
        cfg.mut_always = params.value("mut_always", false);
        return std::make_unique<MultiStagePlanner>(w, cfg, seed, counters);
    }
    bool adv;
    std::string base;
    if (name.ends_with("-adv")) {
        adv = true;
        base = name.substr(0, name.size() - 4);
    } else if (name.ends_with("-noadv")) {
        adv = false;
        base = name.substr(0, name.size() - 6);
    } else {
        throw ConfigError("unknown planner: " + name);
    }
    BaselineConfig cfg;
    cfg.rrt = rrt_params_for(w, params);
    cfg.vicinity = params.value("vicinity_factor", 4.0) * w.robot_size;
    cfg.waypoint_p = params.value("waypoint_p", 0.4);
    cfg.waypoint_cache_cap = params.value("waypoint_cache_cap", 100);
    cfg.reuse_p = params.value("reuse_p", 0.1);
    cfg.forest_cap = params.value("forest_cap", 25);
    cfg.min_subtree = params.value("min_subtree", 5);
    cfg.advance_when_disconnected = adv;
    if (base == "drrt") return std::make_unique<DrrtPlanner>(w, cfg, seed, counters);
    if (base == "mprrt") return std::make_unique<MprrtPlanner>(w, cfg, seed, counters);
    throw ConfigError("unknown planner: " + name);
}

TrialResult run_trial(const TrialSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    World w = load_map_file(spec.map_path, mix_seed(spec.seed, 0x1));
    Counters counters;
    CollisionCounter exec_cc;  // execution checks, kept out of the C.C. metric
    auto planner = make_planner(spec.planner, spec.params, w, mix_seed(spec.seed, 0x2), counters);

    std::ofstream trace_out;
    if (!spec.trace_path.empty()) {
        trace_out.open(spec.trace_path);
        if (!trace_out) throw std::runtime_error("cannot open trace output: " + spec.trace_path);
    }

    TrialResult res;
    res.seed = spec.seed;
    res.ticks_elapsed = spec.cutoff_ticks;
    for (long long tick = 1; tick <= spec.cutoff_ticks; ++tick) {
        update_world(w, 1);
        planner->plan(w, spec.budget_per_tick);
        res.path_length_traversed += advance_robot(w, planner->active_path(), 1, exec_cc);
        if (trace_out.is_open()) trace_out << snapshot(w, planner->active_path()) << "\n";
        if (distance(w.robot_pos, w.goal) <= 1e-9) {
            res.success = true;
            res.ticks_elapsed = tick;
            break;
        }
    }
    res.cc = counters.cc.count;
    res.nn = counters.nn.count;
    res.restarts = planner->restarts();
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SuiteConfig parse_suite_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("suite config must be a JSON object");
    SuiteConfig cfg;
    if (!doc.contains("planners") || !doc["planners"].is_array() || doc["planners"].empty())
        throw ConfigError("planners: non-empty array required");
    for (const auto& p : doc["planners"]) cfg.planners.push_back(p.get<std::string>());
    if (!doc.contains("maps") || !doc["maps"].is_array() || doc["maps"].empty())
        throw ConfigError("maps: non-empty array required");
    for (const auto& m : doc["maps"]) cfg.maps.push_back(m.get<std::string>());
    if (!doc.contains("trials")) throw ConfigError("trials: required");
    cfg.trials = doc["trials"].get<int>();
    if (cfg.trials <= 0) throw ConfigError("trials: must be positive (empty suites are rejected)");
    cfg.base_seed = doc.value("base_seed", 0ull);
    cfg.cutoff_ticks = doc.value("cutoff_ticks", 20000ll);
    cfg.budget_per_tick = doc.value("budget_per_tick", 300);
    if (cfg.cutoff_ticks <= 0) throw ConfigError("cutoff_ticks: must be positive");
    if (cfg.budget_per_tick <= 0) throw ConfigError("budget_per_tick: must be positive");
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) throw ConfigError("params: must be an object");
        cfg.params = doc["params"];
    }
    return cfg;
}

SuiteResult run_suite(const SuiteConfig& cfg, int jobs) {
    struct Cell {
        std::string planner;
        std::string map;
        int trial_index;
    };
    std::vector<Cell> cells;
    for (const auto& planner : cfg.planners)
        for (const auto& map : cfg.maps)
            for (int i = 0; i < cfg.trials; ++i) cells.push_back({planner, map, i});

    // planner-specific parameter block merged over shared defaults
    auto params_for = [&](const std::string& planner) {
        json p = cfg.params.value("common", json::object());
        std::string base = planner;
        if (auto pos = planner.find('-'); pos != std::string::npos) base = planner.substr(0, pos);
        for (const std::string& key : {base, planner}) {
            if (cfg.params.contains(key))
                for (auto& [k, v] : cfg.params[key].items()) p[k] = v;
        }
        return p;
    };

    std::vector<TrialResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            const Cell& c = cells[i];
            TrialSpec spec;
            spec.planner = c.planner;
            spec.params = params_for(c.planner);
            spec.map_path = c.map;
            spec.seed = cfg.base_seed + static_cast<std::uint64_t>(c.trial_index);
            spec.cutoff_ticks = cfg.cutoff_ticks;
            spec.budget_per_tick = cfg.budget_per_tick;
            results[i] = run_trial(spec);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SuiteResult out;
    out.trials.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out.trials.push_back({cells[i].planner, map_label(cells[i].map), results[i]});

    for (const auto& planner : cfg.planners) {
        for (const auto& map : cfg.maps) {
            SuiteRow row;
            row.planner = planner;
            row.map = map_label(map);
            long long cc = 0, nn = 0, ticks = 0;
            double wall = 0.0;
            int ok = 0;
            for (const auto& lt : out.trials) {
                if (lt.planner != planner || lt.map != row.map) continue;
                ++row.trials;
                if (lt.result.success) {
                    ++ok;
                    cc += lt.result.cc;
                    nn += lt.result.nn;
                    ticks += lt.result.ticks_elapsed;
                    wall += lt.result.wall_seconds;
                }
            }
            row.success_pct = 100.0 * ok / row.trials;
            if (ok > 0) {
                row.mean_cc = static_cast<double>(cc) / ok;
                row.mean_nn = static_cast<double>(nn) / ok;
                row.mean_ticks = static_cast<double>(ticks) / ok;
                row.mean_wall_seconds = wall / ok;
            }
            out.rows.push_back(row);
        }
    }
    return out;
}

void write_results_csv(const SuiteResult& res, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[64];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated " << stamp << "\n";
    out << "planner,map,seed,success,ticks,cc,nn,length,restarts\n";
    for (const auto& lt : res.trials) {
        const auto& r = lt.result;
        out << lt.planner << "," << lt.map << "," << r.seed << "," << (r.success ? 1 : 0) << ","
            << r.ticks_elapsed << "," << r.cc << "," << r.nn << ","
            << fmt(r.path_length_traversed) << "," << r.restarts << "\n";
    }
}

void write_summary_json(const SuiteResult& res, const SuiteConfig& cfg, const std::string& path) {
    json rows = json::array();
    for (const auto& r : res.rows) {
        rows.push_back({{"planner", r.planner},
                        {"map", r.map},
                        {"trials", r.trials},
                        {"success_pct", r.success_pct},
                        {"mean_cc", r.mean_cc},
                        {"mean_nn", r.mean_nn},
                        {"mean_ticks", r.mean_ticks},
                        {"mean_wall_seconds", r.mean_wall_seconds}});
    }
    json doc{{"rows", rows},
             {"metadata",
              {{"rng", "mt19937_64"},
               {"base_seed", cfg.base_seed},
               {"trials", cfg.trials},
               {"cutoff_ticks", cfg.cutoff_ticks},
               {"budget_per_tick", cfg.budget_per_tick},
               {"cc_unit", "one segment-vs-rect test"},
               {"time_note", "ticks are the deterministic unit; wall seconds are informative"}}}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace replan
