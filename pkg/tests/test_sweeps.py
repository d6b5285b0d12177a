"""Ownership sweeps over fixed realized graphs."""

import pytest

from tempo_ncg import (
    HostGraph,
    InvalidPurchase,
    SearchTooLarge,
    Setting,
    TemporalGraph,
    TimeEdge,
    Verdict,
    edge_needers,
    find_nash_by_search,
    is_nash_equilibrium,
    realized_graph,
    sweep_ownership,
)
from tempo_ncg.fixtures import fig4_instance, fig5_left_instance, fig5_right_instance


def edge(u, v, label):
    return TimeEdge(u, v, label)


def all_ones_host(names):
    nodes = tuple(names)
    edges = [
        edge(u, v, 1) for i, u in enumerate(nodes) for v in nodes[i + 1 :]
    ]
    return HostGraph(graph=TemporalGraph(nodes, edges), terminals=nodes)


def star_target(host, center):
    leaves = [v for v in host.nodes if v != center]
    return TemporalGraph(host.nodes, tuple(edge(center, v, 1) for v in leaves))


# -- needer pre-filter ------------------------------------------------------


def test_edge_needers_on_forced_ownership_graph():
    inst = fig4_instance()
    target = realized_graph(inst.profile, inst.host)
    needers = edge_needers(target, inst.host)
    # Every edge here has a unique node that loses a terminal without it,
    # which is what pins the ownership down to a single assignment.
    assert needers == {
        edge("v1", "v2", 5): ("v3",),
        edge("v1", "v4", 2): ("v1",),
        edge("v2", "v3", 4): ("v3",),
        edge("v2", "v4", 2): ("v2",),
        edge("v3", "v4", 3): ("v3",),
    }


def test_edge_needers_all_nodes_need_a_star_edge():
    host = all_ones_host(["a", "b", "c", "v"])
    target = star_target(host, "v")
    needers = edge_needers(target, host)
    # Removing any spoke cuts that leaf off from everyone, so every node
    # loses a terminal, not just the endpoints.
    for losing in needers.values():
        assert losing == host.nodes


# -- fixture sweeps ---------------------------------------------------------


def test_sweep_forced_graph_global():
    inst = fig4_instance()
    target = realized_graph(inst.profile, inst.host)
    result = sweep_ownership(inst.host, target, Setting.GLOBAL)
    assert result.total_assignments == 4**5 == 1024
    assert result.survivors == 1
    assert result.equilibria == ()
    assert result.equilibrium_count == 0


def test_sweep_forced_graph_local_prefilter_empty():
    # (v1,v2)@5 is only needed by v3, which is not an endpoint, so no local
    # assignment survives the filter at all.
    inst = fig4_instance()
    target = realized_graph(inst.profile, inst.host)
    result = sweep_ownership(inst.host, target, Setting.LOCAL)
    assert result.total_assignments == 2**5 == 32
    assert result.survivors == 0
    assert result.equilibria == ()


def test_sweep_global_fixture_graph_has_no_local_ownership():
    inst = fig5_left_instance()
    target = realized_graph(inst.profile, inst.host)
    result = sweep_ownership(inst.host, target, Setting.LOCAL)
    assert result.total_assignments == 32
    assert result.survivors == 0
    assert result.equilibria == ()


def test_sweep_local_fixture_graph_has_no_global_ownership():
    inst = fig5_right_instance()
    target = realized_graph(inst.profile, inst.host)
    result = sweep_ownership(inst.host, target, Setting.GLOBAL)
    assert result.total_assignments == 6**8
    assert result.survivors == 768
    assert result.equilibria == ()


# -- short circuits and errors ----------------------------------------------


def test_sweep_non_spanner_target_short_circuits():
    inst = fig4_instance()
    target = realized_graph(inst.profile, inst.host).without_time_edge(
        edge("v3", "v4", 3)
    )
    result = sweep_ownership(inst.host, target, Setting.GLOBAL)
    assert result.total_assignments == 4**4
    assert result.survivors == 0
    assert result.equilibria == ()


def test_sweep_rejects_edge_the_host_does_not_offer():
    inst = fig4_instance()
    target = TemporalGraph(inst.host.nodes, (edge("v1", "v2", 9),))
    with pytest.raises(InvalidPurchase):
        sweep_ownership(inst.host, target, Setting.GLOBAL)


def test_sweep_budget_bounds_survivors():
    inst = fig5_right_instance()
    target = realized_graph(inst.profile, inst.host)
    with pytest.raises(SearchTooLarge):
        sweep_ownership(inst.host, target, Setting.GLOBAL, budget=767)
    result = sweep_ownership(inst.host, target, Setting.GLOBAL, budget=768)
    assert result.survivors == 768


# -- equilibria found by sweeps ---------------------------------------------


def test_sweep_star_local_every_assignment_is_an_equilibrium():
    host = all_ones_host(["a", "b", "c", "v"])
    target = star_target(host, "v")
    result = sweep_ownership(host, target, Setting.LOCAL)
    assert result.total_assignments == 8
    assert result.survivors == 8
    assert result.equilibrium_count == 8
    for profile in result.equilibria:
        assert profile.setting is Setting.LOCAL
        assert set(realized_graph(profile, host).time_edges()) == set(
            target.time_edges()
        )
        assert is_nash_equilibrium(profile, host).verdict is Verdict.EQUILIBRIUM


def test_sweep_workers_merge_deterministically():
    host = all_ones_host(["a", "b", "c", "v"])
    target = star_target(host, "v")
    serial = sweep_ownership(host, target, Setting.LOCAL, workers=1)
    parallel = sweep_ownership(host, target, Setting.LOCAL, workers=2)
    assert serial == parallel


# -- whole-space search ------------------------------------------------------


def test_find_nash_by_search_small_host():
    host = all_ones_host(["a", "b", "c"])
    profile = find_nash_by_search(host, Setting.LOCAL)
    assert profile is not None
    assert is_nash_equilibrium(profile, host).verdict is Verdict.EQUILIBRIUM
    assert len(set(realized_graph(profile, host).time_edges())) == 2


def test_find_nash_by_search_two_nodes_both_settings():
    host = all_ones_host(["a", "b"])
    for setting in (Setting.LOCAL, Setting.GLOBAL):
        profile = find_nash_by_search(host, setting)
        assert profile is not None
        assert profile.total_purchases() == 1
        assert is_nash_equilibrium(profile, host).verdict is Verdict.EQUILIBRIUM


def test_find_nash_by_search_refuses_oversized_space():
    host = all_ones_host(["a", "b", "c"])
    with pytest.raises(SearchTooLarge):
        find_nash_by_search(host, Setting.LOCAL, max_subsets=0)
