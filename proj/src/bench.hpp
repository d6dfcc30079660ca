#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "planner.hpp"

namespace replan {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Builds a planner by table-row name: multistage, drrt-adv, drrt-noadv,
// mprrt-adv, mprrt-noadv. Unscaled defaults (step 2x, vicinity 4x robot size)
// can be overridden through the params block.
std::unique_ptr<Planner> make_planner(const std::string& name, const nlohmann::json& params,
                                      const World& w, std::uint64_t seed, Counters& counters);

struct TrialSpec {
    std::string planner;
    nlohmann::json params = nlohmann::json::object();
    std::string map_path;
    std::uint64_t seed = 0;
    long long cutoff_ticks = 20000;
    int budget_per_tick = 300;
    std::string trace_path;  // empty disables tracing
};

struct TrialResult {
    bool success = false;
    long long ticks_elapsed = 0;
    long long cc = 0;
    long long nn = 0;
    double path_length_traversed = 0.0;
    int restarts = 0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;  // informative only; never written to results.csv
};

TrialResult run_trial(const TrialSpec& spec);

struct SuiteConfig {
    std::vector<std::string> planners;
    std::vector<std::string> maps;
    int trials = 0;
    std::uint64_t base_seed = 0;
    long long cutoff_ticks = 20000;
    int budget_per_tick = 300;
    nlohmann::json params = nlohmann::json::object();
};

SuiteConfig parse_suite_config(const nlohmann::json& doc);

struct LabeledTrial {
    std::string planner;
    std::string map;
    TrialResult result;
};

struct SuiteRow {
    std::string planner;
    std::string map;
    int trials = 0;
    double success_pct = 0.0;
    // means over successful trials; the CSV carries per-trial values so a
    // different denominator can be recomputed if wanted
    double mean_cc = 0.0;
    double mean_nn = 0.0;
    double mean_ticks = 0.0;
    double mean_wall_seconds = 0.0;
};

struct SuiteResult {
    std::vector<LabeledTrial> trials;  // ordered by (planner, map, trial index)
    std::vector<SuiteRow> rows;
};

SuiteResult run_suite(const SuiteConfig& cfg, int jobs);

void write_results_csv(const SuiteResult& res, const std::string& path);
void write_summary_json(const SuiteResult& res, const SuiteConfig& cfg, const std::string& path);

}  // namespace replan
