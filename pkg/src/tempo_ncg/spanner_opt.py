"""Minimum terminal spanners, minimality pruning, and equilibria from them.

The social optimum of the edge-buying game is a minimum-cardinality terminal
spanner of the host: zero unreached terminals at the fewest bought edges.
Every terminal spanner needs at least n - 1 time edges, because each node
must be statically connected to the terminals. A spanning tree on a single
label matches that bound whenever one exists (inside one label group,
arrivals chain transitively), which settles many instances without any
enumeration; the rest run an exact cardinality-ascending subset search behind
explicit budgets.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from .core import (
    HostGraph,
    NodeId,
    TemporalGraph,
    TimeEdge,
    connected_components,
    is_minimal_terminal_spanner,
    is_terminal_spanner,
    propagate_arrivals,
)
from .errors import NotASpanner, NotMinimal, SearchTooLarge
from .game import Setting, StrategyProfile


@dataclass(frozen=True)
class SpannerSearchConfig:
    """Budgets for the exact optimum search.

    The search refuses to run past either budget rather than silently
    truncating, so a returned graph is always a proven optimum.
    """

    max_candidate_edges: int = 20
    max_subsets: int = 1_000_000

    def __post_init__(self) -> None:
        if self.max_candidate_edges < 1 or self.max_subsets < 1:
            raise ValueError("search budgets must be positive")


def mono_label_spanning_tree(host: HostGraph) -> TemporalGraph | None:
    """Spanning tree using a single label, if some label class connects V.

    Such a tree is a terminal spanner with exactly n - 1 time edges (within
    one label group every node reaches every other), meeting the universal
    lower bound; its existence settles the optimum without enumeration. Scans
    labels ascending and builds the canonical tree greedily.
    """
    for label, edges in host.graph.label_groups():
        pairs = [e.pair for e in edges]
        if len(connected_components(host.nodes, pairs)) != 1:
            continue
        parent: dict[NodeId, NodeId] = {n: n for n in host.nodes}

        def find(a: NodeId) -> NodeId:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        kept: list[TimeEdge] = []
        for edge in sorted(edges):
            ru, rv = find(edge.u), find(edge.v)
            if ru != rv:
                parent[ru] = rv
                kept.append(edge)
        return TemporalGraph(host.nodes, kept)
    return None


def min_terminal_spanner(
    host: HostGraph, config: SpannerSearchConfig | None = None
) -> TemporalGraph:
    """Exact minimum-cardinality terminal spanner of a host.

    Returns a one-label spanning tree directly when some label class connects
    all nodes (n - 1 edges, provably optimal). Otherwise enumerates host
    time-edge subsets by ascending cardinality starting at n - 1 and returns
    the first terminal spanner found, which is the lexicographically least
    optimum. Candidates failing static connectivity are skipped before any
    temporal check.

    Raises:
        SearchTooLarge: the host has more candidate edges or subsets than the
            configured budgets allow; callers fall back to bounds.
    """
    if config is None:
        config = SpannerSearchConfig()
    n = host.node_count
    if n == 1:
        return TemporalGraph(host.nodes)
    tree = mono_label_spanning_tree(host)
    if tree is not None:
        return tree
    pool = sorted(host.time_edges())
    if len(pool) > config.max_candidate_edges:
        raise SearchTooLarge(
            f"{len(pool)} candidate edges exceed the budget of "
            f"{config.max_candidate_edges}"
        )
    examined = 0
    terminals = host.terminals
    for size in range(n - 1, len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            examined += 1
            if examined > config.max_subsets:
                raise SearchTooLarge(
                    f"subset enumeration exceeded {config.max_subsets} sets"
                )
            if len(connected_components(host.nodes, {e.pair for e in combo})) != 1:
                continue
            candidate = TemporalGraph(host.nodes, combo)
            if is_terminal_spanner(candidate, terminals):
                return candidate
    raise AssertionError("internal error: a complete host is its own spanner")


def prune_to_minimal(
    graph: TemporalGraph, terminals: Iterable[NodeId]
) -> TemporalGraph:
    """Drop removable time edges (canonical witness first) until none remain.

    The result is an inclusion-minimal terminal spanner; already-minimal
    inputs come back unchanged.

    Raises:
        NotASpanner: input does not reach every terminal from every node.
    """
    terminal_tuple = tuple(terminals)
    current = graph
    while True:
        minimal, witness = is_minimal_terminal_spanner(current, terminal_tuple)
        if minimal:
            return current
        assert witness is not None
        current = current.without_time_edge(witness)


def ge_from_minimal_spanner(
    graph: TemporalGraph, host: HostGraph
) -> StrategyProfile:
    """Assign each spanner edge to the first node that needs it.

    A node needs an edge when removing it costs the node some terminal. On an
    inclusion-minimal terminal spanner every edge has a needer, and the
    resulting single-owner global profile is a greedy equilibrium: owners
    cannot drop a needed edge, and adds never help an agent that already
    reaches every terminal.

    Raises:
        NotASpanner: ``graph`` is not a terminal spanner of the host.
        NotMinimal: some edge has no needer, i.e. the spanner is not
            inclusion-minimal.
    """
    terminals = host.terminals
    if not is_terminal_spanner(graph, terminals):
        raise NotASpanner("input graph does not reach all terminals from all nodes")
    terminal_set = host.terminal_set
    strategies: dict[NodeId, set[TimeEdge]] = {}
    for edge in sorted(graph.time_edges()):
        reduced_groups = graph.without_time_edge(edge).label_groups()
        needer = None
        for v in host.nodes:
            arrival, _ = propagate_arrivals(reduced_groups, v, targets=terminal_set)
            if any(t not in arrival for t in terminals):
                needer = v
                break
        if needer is None:
            raise NotMinimal(
                f"{edge} is removable, so the spanner is not inclusion-minimal"
            )
        strategies.setdefault(needer, set()).add(edge)
    profile = StrategyProfile(
        setting=Setting.GLOBAL,
        strategies={a: frozenset(es) for a, es in strategies.items()},
    )
    profile.validate(host)
    return profile
