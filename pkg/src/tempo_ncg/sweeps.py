"""Ownership sweeps: who buys each edge of a fixed realized graph.

Given a host and a target realized graph, a sweep enumerates every way of
assigning each time edge to one buying agent (either endpoint in the local
setting, any node in the global one) and verifies each assignment exactly.
A sound pre-filter shrinks the space first: an owner that could drop its edge
without losing a terminal always improves by doing so, so only assignments
giving every edge to a node that needs it can be equilibria. Needing is a
property of the target graph alone, so the filter is per-edge and the
surviving space is a cartesian product.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    HostGraph,
    NodeId,
    TemporalGraph,
    TimeEdge,
    is_terminal_spanner,
    propagate_arrivals,
)
from .errors import InvalidPurchase, SearchTooLarge
from .game import Setting, StrategyProfile, Verdict, is_nash_equilibrium


@dataclass(frozen=True)
class SweepResult:
    """Outcome of an ownership sweep.

    ``total_assignments`` counts the raw space, ``survivors`` how many passed
    the drop pre-filter and were verified exactly, ``equilibria`` the ones
    that held up.
    """

    total_assignments: int
    survivors: int
    equilibria: tuple[StrategyProfile, ...]

    @property
    def equilibrium_count(self) -> int:
        return len(self.equilibria)


def edge_needers(
    target: TemporalGraph, host: HostGraph
) -> dict[TimeEdge, tuple[NodeId, ...]]:
    """For each target edge, the nodes that lose a terminal when it is gone."""
    needers: dict[TimeEdge, tuple[NodeId, ...]] = {}
    terminal_set = host.terminal_set
    for edge in sorted(target.time_edges()):
        reduced = target.without_time_edge(edge).label_groups()
        losing = []
        for v in host.nodes:
            arrival, _ = propagate_arrivals(reduced, v, targets=terminal_set)
            if any(t not in arrival for t in host.terminals):
                losing.append(v)
        needers[edge] = tuple(losing)
    return needers


def _profile_from_owners(
    setting: Setting, edges: tuple[TimeEdge, ...], owners: tuple[NodeId, ...]
) -> StrategyProfile:
    strategies: dict[NodeId, set[TimeEdge]] = {}
    for owner, edge in zip(owners, edges):
        strategies.setdefault(owner, set()).add(edge)
    return StrategyProfile(
        setting=setting,
        strategies={a: frozenset(es) for a, es in strategies.items()},
    )


def _verify_chunk(
    host: HostGraph,
    setting: Setting,
    edges: tuple[TimeEdge, ...],
    owner_tuples: list[tuple[NodeId, ...]],
) -> list[StrategyProfile]:
    found = []
    for owners in owner_tuples:
        profile = _profile_from_owners(setting, edges, owners)
        if is_nash_equilibrium(profile, host).verdict is Verdict.EQUILIBRIUM:
            found.append(profile)
    return found


def sweep_ownership(
    host: HostGraph,
    target: TemporalGraph,
    mode: Setting,
    budget: int | None = None,
    workers: int = 1,
) -> SweepResult:
    """Enumerate and exactly verify all ownerships of ``target``'s edges.

    Results are deterministic and canonical regardless of ``workers``; chunks
    are merged in enumeration order.

    Raises:
        InvalidPurchase: the target uses an edge the host does not offer.
        SearchTooLarge: survivors exceed ``budget``.
    """
    edges = tuple(sorted(target.time_edges()))
    for edge in edges:
        if not host.has_time_edge(edge):
            raise InvalidPurchase(f"target edge {edge} is not offered by the host")
    total = 1
    for edge in edges:
        total *= 2 if mode is Setting.LOCAL else host.node_count
    if not is_terminal_spanner(target, host.terminals):
        # Some node misses a terminal whoever owns the edges; nothing survives.
        return SweepResult(total_assignments=total, survivors=0, equilibria=())
    needers = edge_needers(target, host)
    choices: list[tuple[NodeId, ...]] = []
    for edge in edges:
        allowed = edge.pair if mode is Setting.LOCAL else host.nodes
        choices.append(tuple(v for v in allowed if v in needers[edge]))
    survivors = 1
    for choice in choices:
        survivors *= len(choice)
    if survivors == 0:
        return SweepResult(total_assignments=total, survivors=0, equilibria=())
    if budget is not None and survivors > budget:
        raise SearchTooLarge(f"{survivors} surviving assignments exceed {budget}")
    owner_tuples = list(itertools.product(*choices))
    if workers <= 1 or len(owner_tuples) < 4:
        equilibria = tuple(_verify_chunk(host, mode, edges, owner_tuples))
    else:
        chunk_size = max(1, len(owner_tuples) // (workers * 4))
        chunks = [
            owner_tuples[i : i + chunk_size]
            for i in range(0, len(owner_tuples), chunk_size)
        ]
        found: list[StrategyProfile] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(
                _verify_chunk,
                itertools.repeat(host),
                itertools.repeat(mode),
                itertools.repeat(edges),
                chunks,
            ):
                found.extend(result)
        equilibria = tuple(found)
    return SweepResult(
        total_assignments=total, survivors=survivors, equilibria=equilibria
    )


def find_nash_by_search(
    host: HostGraph,
    setting: Setting,
    max_subsets: int = 200_000,
) -> StrategyProfile | None:
    """First equilibrium found by exhausting realized graphs and ownerships.

    Enumerates candidate realized edge sets by ascending size from n - 1,
    keeps terminal spanners, and sweeps each one's ownerships. Intended for
    small hosts (oracle duty, product-construction inputs); refuses larger
    spaces.

    Raises:
        SearchTooLarge: the subset space exceeds ``max_subsets``.
    """
    pool = sorted(host.time_edges())
    n = host.node_count
    examined = 0
    for size in range(max(n - 1, 0), len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            examined += 1
            if examined > max_subsets:
                raise SearchTooLarge(
                    f"realized-graph enumeration exceeded {max_subsets} sets"
                )
            target = TemporalGraph(host.nodes, combo)
            if not is_terminal_spanner(target, host.terminals):
                continue
            result = sweep_ownership(host, target, setting)
            if result.equilibria:
                return result.equilibria[0]
    return None
