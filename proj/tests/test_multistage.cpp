#include "doctest.h"
#include "multistage.hpp"
#include "oracles.hpp"

using namespace replan;

namespace {

Path random_free_path(Rng& rng, std::span<const Rect> obstacles, int max_tries = 200) {
    for (int t = 0; t < max_tries; ++t) {
        Path p;
        int n = 3 + static_cast<int>(rng.index(5));
        for (int i = 0; i < n; ++i) p.push_back({rng.uniform(0, 100), rng.uniform(0, 100)});
        CollisionCounter cc;
        if (path_feasible(p, obstacles, cc).free) return p;
    }
    return {{0, 0}, {100, 100}};
}

std::vector<Rect> random_obstacles(Rng& rng, int n) {
    std::vector<Rect> obs;
    for (int i = 0; i < n; ++i)
        obs.push_back({{rng.uniform(10, 90), rng.uniform(10, 90)}, rng.uniform(0.5, 4),
                       rng.uniform(0.5, 4)});
    return obs;
}

}  // namespace

TEST_CASE("arc: forced two-point detour in empty space") {
    Path p{{0, 0}, {4, 0}};
    CollisionCounter cc;
    CHECK(arc_apply(p, 0, 2.0, true, {}, cc));
    CHECK(p == Path{{0, 0}, {0, 2}, {4, 2}, {4, 0}});
}

TEST_CASE("arc: no-op when every candidate segment is blocked") {
    // the offset lands inside a wide obstacle, so b->n1 is blocked for both
    // the two-point detour and the single-point fallback
    std::vector<Rect> obs{{{2, 1}, 10, 0.4}};
    Path p{{0, 0}, {4, 0}};
    Path before = p;
    CollisionCounter cc;
    CHECK_FALSE(arc_apply(p, 0, 1.0, true, obs, cc));
    CHECK(p == before);
}

TEST_CASE("arc: falls back to a single point when n2's segments are blocked") {
    // obstacle over n2 = (4, 2) blocks n1->n2 and n2->c, but b->n1 and
    // n1->c stay free
    std::vector<Rect> obs{{{4, 2}, 1, 1}};
    CollisionCounter probe;
    REQUIRE(path_feasible({{0, 0}, {0, 2}, {4, 0}}, obs, probe).free);
    Path p{{0, 0}, {4, 0}};
    CollisionCounter cc;
    CHECK(arc_apply(p, 0, 2.0, true, obs, cc));
    CHECK(p == Path{{0, 0}, {0, 2}, {4, 0}});
}

TEST_CASE("mut: forced move in empty space") {
    Path p{{0, 3}, {3, 3}, {6, 3}};
    CollisionCounter cc;
    CHECK(mut_apply(p, 1, 1.0, -1.0, {}, cc));
    CHECK(p == Path{{0, 3}, {4, 2}, {6, 3}});
}

TEST_CASE("mut: rejected when the candidate lands inside an obstacle") {
    std::vector<Rect> obs{{{4, 2}, 0.5, 0.5}};
    Path p{{0, 3}, {3, 3}, {6, 3}};
    Path before = p;
    CollisionCounter cc;
    CHECK_FALSE(mut_apply(p, 1, 1.0, -1.0, obs, cc));
    CHECK(p == before);
}

TEST_CASE("mut: endpoints are immutable") {
    Path p{{0, 0}, {3, 3}, {6, 6}};
    CollisionCounter cc;
    CHECK_THROWS_AS(mut_apply(p, 0, 1, 1, {}, cc), std::out_of_range);
    CHECK_THROWS_AS(mut_apply(p, 2, 1, 1, {}, cc), std::out_of_range);
}

TEST_CASE("post_process: worked examples") {
    CollisionCounter cc;
    SUBCASE("collinear skip") {
        Path p{{0, 0}, {1, 0}, {2, 0}};
        post_process(p, {}, cc);
        CHECK(p == Path{{0, 0}, {2, 0}});
    }
    SUBCASE("detour where every skip collides stays unchanged") {
        std::vector<Rect> obs{{{2, 0.5}, 1.2, 1.2}};
        Path p{{0, 0}, {0, 2.5}, {4, 2.5}, {4, 0}};
        CollisionCounter probe;
        REQUIRE(path_feasible(p, obs, probe).free);
        Path before = p;
        post_process(p, obs, cc);
        CHECK(p == before);
    }
    SUBCASE("chained skips in one pass (empty space)") {
        Path p{{0, 0}, {0, 5}, {5, 5}, {5, 0}};
        post_process(p, {}, cc);
        CHECK(p == Path{{0, 0}, {5, 0}});
    }
}

TEST_CASE("operators preserve endpoints and FREE paths stay FREE (fuzz)") {
    Rng rng(808);
    for (int trial = 0; trial < 500; ++trial) {
        auto obs = random_obstacles(rng, 1 + static_cast<int>(rng.index(6)));
        Path p = random_free_path(rng, obs);
        Point2 first = p.front(), last = p.back();

        Path q = p;
        CollisionCounter cc;
        int seg = static_cast<int>(rng.index(q.size() - 1));
        arc(q, seg, 4.0, obs, rng, cc);
        CHECK(q.front() == first);
        CHECK(q.back() == last);

        if (q.size() > 2) {
            int idx = 1 + static_cast<int>(rng.index(q.size() - 2));
            mut(q, idx, 4.0, obs, rng, cc);
            CHECK(q.front() == first);
            CHECK(q.back() == last);
        }

        double len_before = path_length(q);
        post_process(q, obs, cc);
        CHECK(q.front() == first);
        CHECK(q.back() == last);
        CHECK(path_length(q) <= len_before + 1e-9);

        // idempotence
        Path twice = q;
        post_process(twice, obs, cc);
        CHECK(twice == q);
    }
}

TEST_CASE("process: empty map seeds then navigates with a 2-point path") {
    World w = load_map(R"({
      "bounds": [100, 100],
      "robot": {"start": [10, 10], "speed": 1.0, "size": 1.0},
      "goal": [90, 90]
    })");
    Counters counters;
    MultiStageConfig cfg;
    cfg.rrt.step_size = 2.0;
    cfg.vicinity = 4.0;
    MultiStagePlanner planner(w, cfg, 42, counters);
    planner.plan(w, 50000);
    REQUIRE(planner.navigating());
    CHECK(planner.active_path().size() == 2);
    CHECK(planner.active_path().front() == w.robot_pos);
    CHECK(planner.active_path().back() == w.goal);
}

TEST_CASE("process: FREE path resets failures and only shortcuts") {
    World w = load_map(R"({
      "bounds": [100, 100],
      "robot": {"start": [10, 10], "speed": 1.0, "size": 1.0},
      "goal": [90, 90]
    })");
    Counters counters;
    MultiStageConfig cfg;
    cfg.rrt.step_size = 2.0;
    MultiStagePlanner planner(w, cfg, 7, counters);
    planner.plan(w, 50000);
    REQUIRE(planner.navigating());
    Path before = planner.active_path();
    planner.plan(w, 300);
    CHECK(planner.active_path() == before);  // already optimal, shortcut is a no-op
    CHECK(planner.consecutive_failures() == 0);
}

TEST_CASE("process: permanently blocked corridor restarts after stuck_window failures") {
    // a wall corridor whose only passage is filled by a parked mover
    World w = load_map(R"({
      "bounds": [60, 30],
      "robot": {"start": [5, 15], "speed": 1.0, "size": 1.0},
      "goal": [55, 15],
      "walls": [{"center": [30, 25.5], "half": [2, 4.5]}, {"center": [30, 4.5], "half": [2, 4.5]}]
    })");
    w.movers.push_back({Rect{{30, 15}, 2.2, 6.5}, {0, 0}});  // plugs the gap
    Counters counters;
    MultiStageConfig cfg;
    cfg.rrt.step_size = 2.0;
    cfg.vicinity = 4.0;
    cfg.stuck_window = 50;

    // find a seed whose RRT seeds through the corridor while it is open
    World open = w;
    open.movers.clear();
    MultiStagePlanner planner(open, cfg, 11, counters);
    planner.plan(open, 200000);
    REQUIRE(planner.navigating());

    // now the corridor is plugged; repair cannot succeed and must give up
    int before = planner.restarts();
    planner.plan(w, 49);  // one less than the window: still navigating
    CHECK(planner.restarts() == before);
    CHECK(planner.consecutive_failures() == 49);
    planner.plan(w, 1);
    CHECK(planner.restarts() == before + 1);
    CHECK_FALSE(planner.navigating());
}

TEST_CASE("process: determinism for identical seed, world, and budget") {
    auto run_once = [](std::uint64_t seed) {
        World w = load_map_file(std::string(MAPS_DIR) + "/map1.json", 5);
        Counters counters;
        MultiStageConfig cfg;
        cfg.rrt.step_size = 2.0;
        MultiStagePlanner planner(w, cfg, seed, counters);
        CollisionCounter exec_cc;
        for (int t = 0; t < 200; ++t) {
            update_world(w, 1);
            planner.plan(w, 300);
            advance_robot(w, planner.active_path(), 1, exec_cc);
        }
        return std::make_tuple(w.robot_pos, planner.active_path(), counters.cc.count,
                               counters.nn.count);
    };
    auto a = run_once(99);
    auto b = run_once(99);
    CHECK(std::get<0>(a) == std::get<0>(b));
    CHECK(std::get<1>(a) == std::get<1>(b));
    CHECK(std::get<2>(a) == std::get<2>(b));
    CHECK(std::get<3>(a) == std::get<3>(b));
}
