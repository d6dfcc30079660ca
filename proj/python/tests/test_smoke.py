import json
import os

import pytest

import replan2d

MAPS = os.path.join(os.path.dirname(__file__), "..", "..", "maps")

SMALL_MAP = json.dumps(
    {
        "bounds": [40, 40],
        "robot": {"start": [5, 5], "speed": 1.0, "size": 1.0},
        "goal": [35, 35],
    }
)


def test_segment_hits_rect():
    assert replan2d.segment_hits_rect(-2, 0, 2, 0, 0, 0, 1, 1)
    assert not replan2d.segment_hits_rect(10, 10, 11, 10, 0, 0, 1, 1)
    # boundary contact counts: closed sets
    assert replan2d.segment_hits_rect(-2, 1, 2, 1, 0, 0, 1, 1)


def test_path_is_free():
    free, blocked = replan2d.path_is_free([(0, 0), (10, 0)], [(5, 0, 1, 1)])
    assert not free
    assert blocked == 0
    free, blocked = replan2d.path_is_free([(0, 0), (5, 3), (10, 0)], [(5, 0, 1, 1)])
    assert free
    assert blocked == -1


def test_shortcut():
    out = replan2d.shortcut([(0, 0), (0, 5), (5, 5), (5, 0)], [])
    assert out == [(0, 0), (5, 0)]


def test_run_trial_and_determinism():
    path = os.path.join(MAPS, "map1.json")
    a = replan2d.run_trial(path, "multistage", seed=3, cutoff=400, budget=300)
    b = replan2d.run_trial(path, "multistage", seed=3, cutoff=400, budget=300)
    assert a == b
    assert a["cc"] > 0 and a["nn"] > 0


@pytest.mark.parametrize("planner", ["multistage", "drrt-adv", "mprrt-noadv"])
def test_simulation_reaches_goal_on_open_map(planner):
    sim = replan2d.Simulation(SMALL_MAP, planner, seed=1)
    done = False
    for _ in range(3000):
        if sim.step(budget=500):
            done = True
            break
    assert done
    assert sim.robot == sim.goal
    assert sim.traversed >= 42.0  # at least the straight-line distance


def test_simulation_exposes_path():
    sim = replan2d.Simulation(SMALL_MAP, "multistage", seed=2)
    for _ in range(50):
        sim.step(budget=500)
        if sim.path:
            assert sim.path[0] == sim.robot
