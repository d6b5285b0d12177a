"""Temporal graphs, temporal reachability, and terminal-spanner predicates.

A temporal graph assigns every undirected edge a nonempty set of integer time
labels; each (pair, label) combination is one *time edge*, the unit that game
agents buy. A temporal path is a walk whose labels never decrease (equal labels
on consecutive hops are allowed); a path leaves its source at time 0 and its
arrival time is the label of its last edge. A host graph is a complete temporal
graph together with a nonempty set of terminal nodes.

Earliest-arrival computation processes labels in ascending order and runs a
fixed point inside each label group, so chains of equally labelled edges
propagate in one pass.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import IncompleteHost, NoTerminals, NotASpanner, UnknownNode

NodeId = str

_INF = float("inf")


@dataclass(frozen=True, order=True)
class TimeEdge:
    """One purchasable unit: an unordered node pair at a single time label.

    Endpoints are stored in lexicographic order regardless of construction
    order, so equal time edges always compare and hash equal.
    """

    u: NodeId
    v: NodeId
    label: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"self-loop at {self.u!r}")
        if not isinstance(self.label, int) or isinstance(self.label, bool):
            raise ValueError(f"label must be an int, got {self.label!r}")
        if self.label < 1:
            raise ValueError(f"labels start at 1, got {self.label}")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    @property
    def pair(self) -> tuple[NodeId, NodeId]:
        return (self.u, self.v)

    def touches(self, node: NodeId) -> bool:
        return node == self.u or node == self.v

    def other(self, node: NodeId) -> NodeId:
        if node == self.u:
            return self.v
        if node == self.v:
            return self.u
        raise UnknownNode(f"{node!r} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"({self.u},{self.v})@{self.label}"


def _canonical_pair(a: NodeId, b: NodeId) -> tuple[NodeId, NodeId]:
    return (a, b) if a <= b else (b, a)


class TemporalGraph:
    """Immutable undirected temporal graph.

    Nodes are string ids; labels per pair are kept as sorted duplicate-free
    tuples. Equality and hashing cover nodes and labelled edges.
    """

    __slots__ = ("_nodes", "_node_set", "_labels", "_groups", "_hash")

    def __init__(self, nodes: Iterable[NodeId], edges: Iterable[TimeEdge] = ()) -> None:
        node_tuple = tuple(sorted(set(nodes)))
        for node in node_tuple:
            if not isinstance(node, str) or not node:
                raise UnknownNode(f"node ids must be nonempty strings, got {node!r}")
        node_set = frozenset(node_tuple)
        by_pair: dict[tuple[NodeId, NodeId], set[int]] = {}
        for edge in edges:
            if edge.u not in node_set or edge.v not in node_set:
                raise UnknownNode(f"edge {edge} uses a node outside the graph")
            by_pair.setdefault(edge.pair, set()).add(edge.label)
        self._nodes = node_tuple
        self._node_set = node_set
        self._labels: dict[tuple[NodeId, NodeId], tuple[int, ...]] = {
            pair: tuple(sorted(labels)) for pair, labels in sorted(by_pair.items())
        }
        self._groups: tuple[tuple[int, tuple[TimeEdge, ...]], ...] | None = None
        self._hash: int | None = None

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return self._nodes

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    def __contains__(self, node: NodeId) -> bool:
        return node in self._node_set

    def pairs(self) -> Iterator[tuple[NodeId, NodeId]]:
        """Static edges (pairs carrying at least one label), canonical order."""
        return iter(self._labels)

    @property
    def static_edge_count(self) -> int:
        return len(self._labels)

    def labels(self, a: NodeId, b: NodeId) -> tuple[int, ...]:
        """Sorted labels of pair {a, b}; empty tuple if the pair is absent."""
        for node in (a, b):
            if node not in self._node_set:
                raise UnknownNode(f"{node!r} is not in the graph")
        return self._labels.get(_canonical_pair(a, b), ())

    def time_edges(self) -> Iterator[TimeEdge]:
        for (u, v), labels in self._labels.items():
            for label in labels:
                yield TimeEdge(u, v, label)

    @property
    def time_edge_count(self) -> int:
        return sum(len(labels) for labels in self._labels.values())

    @property
    def lifetime(self) -> int:
        """Largest label present, 0 for an edgeless graph."""
        return max((labels[-1] for labels in self._labels.values()), default=0)

    @property
    def is_simple(self) -> bool:
        return all(len(labels) == 1 for labels in self._labels.values())

    def has_time_edge(self, edge: TimeEdge) -> bool:
        return edge.label in self._labels.get(edge.pair, ())

    def with_time_edges(self, extra: Iterable[TimeEdge]) -> "TemporalGraph":
        return TemporalGraph(self._nodes, [*self.time_edges(), *extra])

    def without_time_edge(self, edge: TimeEdge) -> "TemporalGraph":
        if not self.has_time_edge(edge):
            raise UnknownNode(f"{edge} is not in the graph")
        return TemporalGraph(
            self._nodes, (e for e in self.time_edges() if e != edge)
        )

    def relabel_nodes(self, mapping: Mapping[NodeId, NodeId]) -> "TemporalGraph":
        """Rename nodes through a total injective mapping."""
        missing = [n for n in self._nodes if n not in mapping]
        if missing:
            raise UnknownNode(f"mapping misses nodes {missing}")
        if len(set(mapping[n] for n in self._nodes)) != len(self._nodes):
            raise ValueError("node mapping is not injective")
        return TemporalGraph(
            (mapping[n] for n in self._nodes),
            (TimeEdge(mapping[e.u], mapping[e.v], e.label) for e in self.time_edges()),
        )

    def label_groups(self) -> tuple[tuple[int, tuple[TimeEdge, ...]], ...]:
        """Time edges grouped by ascending label, cached."""
        if self._groups is None:
            by_label: dict[int, list[TimeEdge]] = {}
            for edge in self.time_edges():
                by_label.setdefault(edge.label, []).append(edge)
            self._groups = tuple(
                (label, tuple(sorted(by_label[label]))) for label in sorted(by_label)
            )
        return self._groups

    def _key(self) -> tuple:
        return (self._nodes, tuple(self._labels.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return (
            f"TemporalGraph(n={len(self._nodes)}, pairs={len(self._labels)}, "
            f"time_edges={self.time_edge_count})"
        )


@dataclass(frozen=True)
class HostGraph:
    """A complete temporal graph plus a nonempty terminal set.

    Instances produced by :func:`validate_and_normalize_host` carry gap-free
    labels 1..#distinct. Direct construction checks terminals only; use the
    validator for untrusted input.
    """

    graph: TemporalGraph
    terminals: tuple[NodeId, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.terminals)))
        if not ordered:
            raise NoTerminals("a host graph needs at least one terminal")
        for t in ordered:
            if t not in self.graph:
                raise UnknownNode(f"terminal {t!r} is not a node of the host")
        object.__setattr__(self, "terminals", ordered)

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return self.graph.nodes

    @property
    def node_count(self) -> int:
        return self.graph.node_count

    @property
    def terminal_count(self) -> int:
        return len(self.terminals)

    @property
    def terminal_set(self) -> frozenset[NodeId]:
        return frozenset(self.terminals)

    @property
    def lifetime(self) -> int:
        return self.graph.lifetime

    @property
    def time_edge_count(self) -> int:
        return self.graph.time_edge_count

    def labels(self, a: NodeId, b: NodeId) -> tuple[int, ...]:
        return self.graph.labels(a, b)

    def min_label(self, a: NodeId, b: NodeId) -> int:
        labels = self.graph.labels(a, b)
        if not labels:
            raise IncompleteHost(f"host has no labels on pair ({a!r}, {b!r})")
        return labels[0]

    def time_edges(self) -> Iterator[TimeEdge]:
        return self.graph.time_edges()

    def has_time_edge(self, edge: TimeEdge) -> bool:
        return self.graph.has_time_edge(edge)


def validate_and_normalize_host(
    raw: TemporalGraph, terminals: Iterable[NodeId]
) -> HostGraph:
    """Check completeness and terminal sanity, then normalize labels.

    Normalization maps the distinct labels of the whole graph onto 1..#distinct
    by rank, which preserves every temporal path (only the order of labels
    matters for reachability). The function is idempotent.

    Raises:
        NoTerminals: the terminal iterable is empty.
        UnknownNode: a terminal is not a node of ``raw``.
        IncompleteHost: some node pair carries no label.
    """
    terminal_tuple = tuple(sorted(set(terminals)))
    if not terminal_tuple:
        raise NoTerminals("a host graph needs at least one terminal")
    for t in terminal_tuple:
        if t not in raw:
            raise UnknownNode(f"terminal {t!r} is not a node of the graph")
    nodes = raw.nodes
    for i, a in enumerate(nodes):
        for b in nodes[i + 1 :]:
            if not raw.labels(a, b):
                raise IncompleteHost(f"pair ({a!r}, {b!r}) has no time label")
    distinct = sorted({edge.label for edge in raw.time_edges()})
    rank = {label: i + 1 for i, label in enumerate(distinct)}
    normalized = TemporalGraph(
        nodes, (TimeEdge(e.u, e.v, rank[e.label]) for e in raw.time_edges())
    )
    return HostGraph(graph=normalized, terminals=terminal_tuple)


@dataclass(frozen=True)
class ArrivalMap:
    """Earliest temporal arrival times from a fixed source.

    ``arrival`` maps every reachable node to its earliest arrival time (the
    source itself to 0); unreachable nodes are absent. ``predecessor`` holds,
    for every reachable node except the source, the final time edge of one
    earliest-arrival path.
    """

    source: NodeId
    arrival: Mapping[NodeId, int]
    predecessor: Mapping[NodeId, TimeEdge]

    def arrival_of(self, node: NodeId) -> int | None:
        return self.arrival.get(node)

    def can_reach(self, node: NodeId) -> bool:
        return node in self.arrival

    @property
    def reached(self) -> frozenset[NodeId]:
        return frozenset(self.arrival)

    def path_to(self, node: NodeId) -> tuple[TimeEdge, ...]:
        """Reconstruct one earliest-arrival temporal path to ``node``."""
        if node not in self.arrival:
            raise ValueError(f"{node!r} is unreachable from {self.source!r}")
        hops: list[TimeEdge] = []
        current = node
        while current != self.source:
            edge = self.predecessor[current]
            hops.append(edge)
            current = edge.other(current)
        hops.reverse()
        return tuple(hops)


def propagate_arrivals(
    groups: Iterable[tuple[int, tuple[TimeEdge, ...]]],
    source: NodeId,
    extra: Iterable[TimeEdge] = (),
    targets: frozenset[NodeId] | None = None,
    track_predecessors: bool = False,
) -> tuple[dict[NodeId, int], dict[NodeId, TimeEdge]]:
    """Earliest-arrival sweep over pre-grouped time edges.

    ``groups`` must be sorted by ascending label (as from
    :meth:`TemporalGraph.label_groups`); ``extra`` edges are merged in without
    copying the base structure, which keeps deviation searches cheap. When
    ``targets`` is given the sweep stops as soon as all targets are reached.
    Within one label the sweep iterates to a fixed point so equally labelled
    edges chain.
    """
    arrival: dict[NodeId, int] = {source: 0}
    predecessor: dict[NodeId, TimeEdge] = {}
    extra_by_label: dict[int, list[TimeEdge]] = {}
    for edge in extra:
        extra_by_label.setdefault(edge.label, []).append(edge)
    if extra_by_label:
        base = {label: edges for label, edges in groups}
        labels = sorted(set(base) | set(extra_by_label))
        merged: list[tuple[int, tuple[TimeEdge, ...]]] = [
            (
                label,
                tuple(base.get(label, ())) + tuple(sorted(extra_by_label.get(label, ()))),
            )
            for label in labels
        ]
    else:
        merged = list(groups)
    done = targets is not None and targets <= arrival.keys()
    for label, edges in merged:
        if done:
            break
        changed = True
        while changed:
            changed = False
            for edge in edges:
                au = arrival.get(edge.u, _INF)
                av = arrival.get(edge.v, _INF)
                if au <= label < av:
                    arrival[edge.v] = label
                    if track_predecessors:
                        predecessor[edge.v] = edge
                    changed = True
                elif av <= label < au:
                    arrival[edge.u] = label
                    if track_predecessors:
                        predecessor[edge.u] = edge
                    changed = True
        if targets is not None and targets <= arrival.keys():
            done = True
    return arrival, predecessor


def earliest_arrivals(graph: TemporalGraph, source: NodeId) -> ArrivalMap:
    """Earliest arrival times from ``source`` over the whole graph.

    Raises:
        UnknownNode: ``source`` is not a node of ``graph``.
    """
    if source not in graph:
        raise UnknownNode(f"{source!r} is not a node of the graph")
    arrival, predecessor = propagate_arrivals(
        graph.label_groups(), source, track_predecessors=True
    )
    return ArrivalMap(source=source, arrival=arrival, predecessor=predecessor)


def reach_set(graph: TemporalGraph, source: NodeId) -> frozenset[NodeId]:
    """All nodes temporally reachable from ``source`` (always includes it)."""
    if source not in graph:
        raise UnknownNode(f"{source!r} is not a node of the graph")
    arrival, _ = propagate_arrivals(graph.label_groups(), source)
    return frozenset(arrival)


def connected_components(
    nodes: Iterable[NodeId], pairs: Iterable[tuple[NodeId, NodeId]]
) -> list[frozenset[NodeId]]:
    """Static (label-blind) connected components, sorted by smallest member."""
    parent: dict[NodeId, NodeId] = {n: n for n in nodes}

    def find(a: NodeId) -> NodeId:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[NodeId, set[NodeId]] = {}
    for n in parent:
        groups.setdefault(find(n), set()).add(n)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _check_terminals(graph: TemporalGraph, terminals: Iterable[NodeId]) -> frozenset[NodeId]:
    terminal_set = frozenset(terminals)
    if not terminal_set:
        raise NoTerminals("terminal set is empty")
    for t in terminal_set:
        if t not in graph:
            raise UnknownNode(f"terminal {t!r} is not a node of the graph")
    return terminal_set


def is_terminal_spanner(graph: TemporalGraph, terminals: Iterable[NodeId]) -> bool:
    """Whether every node of ``graph`` temporally reaches every terminal."""
    terminal_set = _check_terminals(graph, terminals)
    groups = graph.label_groups()
    for node in graph.nodes:
        arrival, _ = propagate_arrivals(groups, node, targets=terminal_set)
        if not terminal_set <= arrival.keys():
            return False
    return True


def is_minimal_terminal_spanner(
    graph: TemporalGraph, terminals: Iterable[NodeId]
) -> tuple[bool, TimeEdge | None]:
    """Inclusion-minimality check for a terminal spanner.

    Returns ``(True, None)`` when no single time edge can be dropped, else
    ``(False, edge)`` with the canonically first removable edge.

    Raises:
        NotASpanner: ``graph`` is not a terminal spanner to begin with.
    """
    terminal_set = _check_terminals(graph, terminals)
    if not is_terminal_spanner(graph, terminal_set):
        raise NotASpanner("input graph does not reach all terminals from all nodes")
    for edge in sorted(graph.time_edges()):
        if is_terminal_spanner(graph.without_time_edge(edge), terminal_set):
            return False, edge
    return True, None
