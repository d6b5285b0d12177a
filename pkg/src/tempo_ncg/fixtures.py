"""Built-in instances used by the acceptance suite and the CLI.

Three small cliques exercise the verification stack from both sides:

- ``fig4``: a 4-clique with a 5-edge inclusion-minimal terminal spanner whose
  every ownership assignment is unstable; the bundled profile is the one
  assignment surviving the drop pre-filter, and it is refuted by a one-edge
  deviation of v3.
- ``fig5-left``: a 4-clique with a verified global equilibrium that no local
  ownership of the same realized graph can reproduce.
- ``fig5-right``: a 6-clique with a verified local equilibrium whose realized
  graph admits no global equilibrium ownership, so the two settings'
  equilibria are incomparable.
"""

from __future__ import annotations

from collections.abc import Callable

from .core import TemporalGraph, TimeEdge, validate_and_normalize_host
from .game import Setting, StrategyProfile
from .instance_io import InstanceFile


def _host(nodes: list[str], labels: dict[tuple[str, str], int], terminals: list[str]):
    edges = [TimeEdge(u, v, label) for (u, v), label in labels.items()]
    return validate_and_normalize_host(TemporalGraph(nodes, edges), terminals)


def fig4_instance() -> InstanceFile:
    nodes = ["v1", "v2", "v3", "v4"]
    host = _host(
        nodes,
        {
            ("v1", "v2"): 5,
            ("v1", "v3"): 1,
            ("v1", "v4"): 2,
            ("v2", "v3"): 4,
            ("v2", "v4"): 2,
            ("v3", "v4"): 3,
        },
        terminals=nodes,
    )
    profile = StrategyProfile(
        setting=Setting.GLOBAL,
        strategies={
            "v1": frozenset({TimeEdge("v1", "v4", 2)}),
            "v2": frozenset({TimeEdge("v2", "v4", 2)}),
            "v3": frozenset(
                {
                    TimeEdge("v2", "v3", 4),
                    TimeEdge("v1", "v2", 5),
                    TimeEdge("v3", "v4", 3),
                }
            ),
        },
    )
    return InstanceFile(
        name="fig4",
        host=host,
        profile=profile,
        source="built-in: minimal spanner admitting no stable ownership",
    )


def fig5_left_instance() -> InstanceFile:
    nodes = ["v1", "v2", "v3", "v4"]
    host = _host(
        nodes,
        {
            ("v1", "v2"): 4,
            ("v1", "v3"): 5,
            ("v1", "v4"): 1,
            ("v2", "v3"): 3,
            ("v2", "v4"): 1,
            ("v3", "v4"): 2,
        },
        terminals=nodes,
    )
    profile = StrategyProfile(
        setting=Setting.GLOBAL,
        strategies={
            "v1": frozenset({TimeEdge("v1", "v4", 1)}),
            "v2": frozenset({TimeEdge("v2", "v4", 1)}),
            "v3": frozenset(
                {
                    TimeEdge("v3", "v4", 2),
                    TimeEdge("v2", "v3", 3),
                    TimeEdge("v1", "v2", 4),
                }
            ),
        },
    )
    return InstanceFile(
        name="fig5-left",
        host=host,
        profile=profile,
        source="built-in: global equilibrium with no local counterpart",
    )


def fig5_right_instance() -> InstanceFile:
    nodes = ["v1", "v2", "v3", "v4", "v5", "v6"]
    named = {
        ("v1", "v2"): 1,
        ("v3", "v4"): 1,
        ("v4", "v5"): 1,
        ("v5", "v6"): 1,
        ("v2", "v5"): 1,
        ("v1", "v3"): 2,
        ("v1", "v4"): 2,
        ("v1", "v5"): 2,
        ("v2", "v6"): 2,
    }
    labels = dict(named)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            labels.setdefault((u, v), 3)
    host = _host(nodes, labels, terminals=nodes)
    profile = StrategyProfile(
        setting=Setting.LOCAL,
        strategies={
            "v1": frozenset(
                {
                    TimeEdge("v1", "v2", 1),
                    TimeEdge("v1", "v3", 2),
                    TimeEdge("v1", "v4", 2),
                    TimeEdge("v1", "v5", 2),
                }
            ),
            "v3": frozenset({TimeEdge("v3", "v4", 1)}),
            "v4": frozenset({TimeEdge("v4", "v5", 1)}),
            "v5": frozenset({TimeEdge("v5", "v6", 1)}),
            "v6": frozenset({TimeEdge("v2", "v6", 2)}),
        },
    )
    return InstanceFile(
        name="fig5-right",
        host=host,
        profile=profile,
        source="built-in: local equilibrium with no global counterpart",
        default_label=3,
    )


FIXTURE_BUILDERS: dict[str, Callable[[], InstanceFile]] = {
    "fig4": fig4_instance,
    "fig5-left": fig5_left_instance,
    "fig5-right": fig5_right_instance,
}


def get_fixture(name: str) -> InstanceFile:
    try:
        return FIXTURE_BUILDERS[name]()
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; available: {sorted(FIXTURE_BUILDERS)}"
        ) from None
