import pytest

import gridcache as gc


def test_60x42_five_caches():
    g = gc.GridSpec.parse("60x42")
    p = gc.optimize_axes_placement(g, 5)
    assert p.h_axis == [11, 18, 24]
    assert p.v_axis == [8, 15]
    rep = gc.placement_report(g, p)
    assert rep["total_cost"] == 6752
    assert rep["cache_count_full_network"] == 10


def test_oracle_agrees():
    g = gc.GridSpec(12, 12)
    for n in range(1, 5):
        best, rep = gc.exhaustive_axes_placement(g, n)
        fast = gc.placement_report(g, gc.optimize_axes_placement(g, n))
        assert rep["total_cost"] == fast["total_cost"]


def test_region_cost_and_regular():
    assert gc.region_cost(2, 5, 4) == sum((i - 2) + j for i in range(2, 5) for j in range(4))
    rep = gc.placement_report(gc.GridSpec(24, 24), gc.RegularPlacement(2))
    assert rep["average_distance"] == 5
    assert rep["cache_count_full_network"] == 8


def test_errors_map_to_python():
    g = gc.GridSpec(12, 12)
    with pytest.raises(gc.Infeasible):
        gc.optimize_axes_placement(g, 9)
    with pytest.raises(gc.InvalidArgument):
        gc.GridSpec(1, 4)
    with pytest.raises(gc.BudgetExceeded):
        gc.exhaustive_axes_placement(gc.GridSpec(60, 42), 5, budget=10)
    assert issubclass(gc.Infeasible, gc.Error)


def test_simulation_is_deterministic():
    g = gc.GridSpec(24, 24)
    p = gc.optimize_axes_placement(g, 2)
    a = gc.simulate(g, p, clients=200, duration=100.0, replications=3, seed=4)
    b = gc.simulate(g, p, clients=200, duration=100.0, replications=3, seed=4)
    assert a == b
    assert a["requests"] == 600
    assert a["cache_hits"] + a["producer_hits"] + a["coalesced_requests"] == 600
    assert gc.simulate(g, p, clients=10)["stdev_path_len"] is None


def test_compare_strategies():
    rows = gc.compare_strategies(gc.GridSpec(24, 24), [4, 8])
    assert [(r["budget"], r["strategy"], r["reachable"]) for r in rows] == [
        (4, "axes", True), (4, "regular", False), (8, "axes", True), (8, "regular", True)]
    assert rows[0]["reduction"] == pytest.approx(1 - (19 / 3) / 11)
    assert rows[1]["reduction"] is None


def test_cli_entry():
    code, out, err = gc.run_cli(["optimize", "--grid", "12x12", "--caches", "1"])
    assert code == 0
    assert "total_cost 126" in out
    code, _, _ = gc.run_cli(["optimize", "--grid", "12x12", "--caches", "9"])
    assert code == 3
