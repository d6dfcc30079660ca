#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "trace.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw replan::ConfigError("cannot open " + path);
    return json::parse(in);
}

int cmd_run(const std::string& map, const std::string& planner, std::uint64_t seed,
            long long cutoff, int budget, const std::string& trace,
            const std::string& params_file) {
    replan::TrialSpec spec;
    spec.planner = planner;
    spec.map_path = map;
    spec.seed = seed;
    spec.cutoff_ticks = cutoff;
    spec.budget_per_tick = budget;
    spec.trace_path = trace;
    if (!params_file.empty()) spec.params = load_json_file(params_file);
    replan::TrialResult r = replan::run_trial(spec);
    std::cout << planner << " on " << fs::path(map).stem().string() << " seed " << seed << ": "
              << (r.success ? "reached goal" : "cutoff") << " ticks=" << r.ticks_elapsed
              << " cc=" << r.cc << " nn=" << r.nn << " length=" << r.path_length_traversed
              << " restarts=" << r.restarts << "\n";
    return r.success ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, int jobs) {
    replan::SuiteConfig cfg = replan::parse_suite_config(load_json_file(config_path));
    replan::SuiteResult res = replan::run_suite(cfg, jobs);
    fs::create_directories(out_dir);
    replan::write_results_csv(res, (fs::path(out_dir) / "results.csv").string());
    replan::write_summary_json(res, cfg, (fs::path(out_dir) / "summary.json").string());
    for (const auto& row : res.rows) {
        std::printf("%-14s %-14s success %5.1f%%  cc %10.0f  nn %8.0f  ticks %8.1f\n",
                    row.planner.c_str(), row.map.c_str(), row.success_pct, row.mean_cc,
                    row.mean_nn, row.mean_ticks);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D dynamic path planning: multi-stage planner, DRRT/MP-RRT baselines, "
                 "world simulator and benchmark harness"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a single seeded trial");
    std::string map, planner = "multistage", trace, params_file;
    std::uint64_t seed = 0;
    long long cutoff = 20000;
    int budget = 300;
    run->add_option("--map", map, "Map JSON file")->required();
    run->add_option("--planner", planner,
                    "Planner: multistage, drrt-adv, drrt-noadv, mprrt-adv, mprrt-noadv");
    run->add_option("--seed", seed, "Trial seed");
    run->add_option("--cutoff", cutoff, "Cutoff in ticks");
    run->add_option("--budget", budget, "Planner iterations per tick");
    run->add_option("--trace", trace, "Write a JSON-lines trace to this file");
    run->add_option("--params", params_file, "Planner parameter JSON file");

    auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
    std::string config_path, out_dir = "results";
    int jobs = 1;
    bench->add_option("--config", config_path, "Suite config JSON")->required();
    bench->add_option("--out", out_dir, "Output directory for results.csv / summary.json");
    bench->add_option("--jobs", jobs, "Parallel trial workers (outputs are identical for any value)");

    auto* render = app.add_subcommand("render", "Render a trace into SVG frames");
    std::string trace_path, frames_dir = "frames";
    render->add_option("--trace", trace_path, "Trace JSON-lines file")->required();
    render->add_option("--out", frames_dir, "Output directory for SVG frames");

    auto* validate = app.add_subcommand("validate-map", "Check a map file against the schema");
    std::string map_to_check;
    validate->add_option("map", map_to_check, "Map JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            return cmd_run(map, planner, seed, cutoff, budget, trace, params_file);
        }
        if (app.got_subcommand(bench)) {
            return cmd_bench(config_path, out_dir, jobs);
        }
        if (app.got_subcommand(render)) {
            int n = replan::render_frames(trace_path, frames_dir);
            std::cout << "wrote " << n << " frames to " << frames_dir << "\n";
            return 0;
        }
        if (app.got_subcommand(validate)) {
            replan::load_map_file(map_to_check);
            std::cout << map_to_check << ": ok\n";
            return 0;
        }
    } catch (const replan::MapError& e) {
        std::cerr << "map error: " << e.what() << "\n";
        return 2;
    } catch (const replan::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
