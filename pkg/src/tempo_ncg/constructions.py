"""Host-graph and equilibrium generators.

Every generator returns instances meant to pass the exact verifiers in
:mod:`tempo_ncg.game`; the test suite re-verifies each one. The constructions
are: a label-shifting graph product that multiplies equilibria, scaling by
non-terminal satellites, two single-node extensions (one new terminal, one new
non-terminal), a direct two-terminal equilibrium for arbitrary hosts, iterated
hypercube equilibria, the dense-cycle family with many-edged equilibria, and a
search-based spanning-tree equilibrium for hosts with at most two labels.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .core import (
    HostGraph,
    NodeId,
    TemporalGraph,
    TimeEdge,
    connected_components,
    propagate_arrivals,
    validate_and_normalize_host,
)
from .errors import PreconditionFailed, SearchTooLarge, SettingMismatch
from .game import (
    Setting,
    StrategyProfile,
    Verdict,
    is_greedy_equilibrium,
    is_nash_equilibrium,
    realized_graph,
)

PRODUCT_SEPARATOR = "×"


@dataclass(frozen=True, order=True)
class ProductNodeId:
    """Node of a product graph, rendered "left×right".

    The separator is reserved: factor ids must not contain it, otherwise the
    rendered id would not parse back unambiguously.
    """

    left: NodeId
    right: NodeId

    def __post_init__(self) -> None:
        for part in (self.left, self.right):
            if PRODUCT_SEPARATOR in part:
                raise PreconditionFailed(
                    f"factor id {part!r} contains the reserved separator "
                    f"{PRODUCT_SEPARATOR!r}"
                )

    def render(self) -> NodeId:
        return f"{self.left}{PRODUCT_SEPARATOR}{self.right}"

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, node_id: NodeId) -> "ProductNodeId":
        left, sep, right = node_id.partition(PRODUCT_SEPARATOR)
        if not sep or not left or not right:
            raise PreconditionFailed(f"{node_id!r} is not a product node id")
        return cls(left=left, right=right)


def relabel_instance(
    host: HostGraph, profile: StrategyProfile, mapping: Mapping[NodeId, NodeId]
) -> tuple[HostGraph, StrategyProfile]:
    """Rename nodes of a host and profile consistently."""
    new_host = HostGraph(
        graph=host.graph.relabel_nodes(mapping),
        terminals=tuple(mapping[t] for t in host.terminals),
    )
    return new_host, profile.relabel(mapping)


def graph_product(
    h1: HostGraph,
    s1: StrategyProfile,
    h2: HostGraph,
    s2: StrategyProfile,
) -> tuple[HostGraph, StrategyProfile]:
    """Product host and profile; equilibria of the factors stay equilibria.

    Nodes are all pairs. A pair of nodes sharing the right factor keeps the
    left host's labels; sharing the left factor, the right host's labels
    shifted past the left lifetime; differing in both, a single label later
    than everything else. The product strategy copies s1 into every right
    copy, and copies s2 (shifted) into the aligned edges of copies whose left
    node is a terminal of h1, which preserves both the realized structure and
    the locality of the inputs.

    Raises:
        SettingMismatch: the two profiles use different settings.
    """
    if s1.setting is not s2.setting:
        raise SettingMismatch("product factors must share one setting")
    s1.validate(h1)
    s2.validate(h2)
    shift = h1.lifetime
    diagonal = h1.lifetime + h2.lifetime + 1

    def pid(a: NodeId, b: NodeId) -> NodeId:
        return ProductNodeId(a, b).render()

    nodes = [pid(a, b) for a in h1.nodes for b in h2.nodes]
    edges: list[TimeEdge] = []
    for x1, y1 in itertools.combinations(h1.nodes, 2):
        labels = h1.labels(x1, y1)
        for b in h2.nodes:
            edges.extend(TimeEdge(pid(x1, b), pid(y1, b), l) for l in labels)
    for x2, y2 in itertools.combinations(h2.nodes, 2):
        labels = h2.labels(x2, y2)
        for a in h1.nodes:
            edges.extend(TimeEdge(pid(a, x2), pid(a, y2), l + shift) for l in labels)
    for x1, y1 in itertools.combinations(h1.nodes, 2):
        for x2, y2 in itertools.permutations(h2.nodes, 2):
            if (x1, x2) < (y1, y2):
                edges.append(TimeEdge(pid(x1, x2), pid(y1, y2), diagonal))
    host = HostGraph(
        graph=TemporalGraph(nodes, edges),
        terminals=tuple(pid(a, b) for a in h1.terminals for b in h2.terminals),
    )
    strategies: dict[NodeId, set[TimeEdge]] = {}
    left_terminals = h1.terminal_set
    for v1 in h1.nodes:
        for v2 in h2.nodes:
            bought: set[TimeEdge] = set()
            for e in s1.strategy(v1):
                bought.add(TimeEdge(pid(e.u, v2), pid(e.v, v2), e.label))
            if v1 in left_terminals:
                for e in s2.strategy(v2):
                    bought.add(TimeEdge(pid(v1, e.u), pid(v1, e.v), e.label + shift))
            if bought:
                strategies[pid(v1, v2)] = bought
    profile = StrategyProfile(setting=s1.setting, strategies=strategies)
    return host, profile


def _star_host(c: int, setting: Setting) -> tuple[HostGraph, StrategyProfile]:
    """Complete all-label-1 host on c nodes, one terminal, star equilibrium."""
    width = len(str(max(c - 1, 1)))
    satellites = [f"u{i:0{width}d}" for i in range(1, c)]
    nodes = ["t", *satellites]
    edges = [TimeEdge(a, b, 1) for a, b in itertools.combinations(nodes, 2)]
    host = HostGraph(graph=TemporalGraph(nodes, edges), terminals=("t",))
    profile = StrategyProfile(
        setting=setting,
        strategies={w: frozenset({TimeEdge(w, "t", 1)}) for w in satellites},
    )
    return host, profile


def scale_with_nonterminals(
    h1: HostGraph, s1: StrategyProfile, c: int
) -> tuple[HostGraph, StrategyProfile]:
    """Blow each terminal up into one terminal plus c-1 non-terminal copies.

    Requires every node of ``h1`` to be a terminal. The result has c*k nodes,
    k terminals, and c*m1 + (c-1)*k bought edges. For k >= 2 and c >= 3 the
    product's latest label alone connects the whole host, so the social
    optimum drops to n - 1 while the equilibrium keeps all scaled edges.

    Raises:
        PreconditionFailed: some node of ``h1`` is not a terminal, or c < 1.
    """
    if c < 1:
        raise PreconditionFailed(f"need c >= 1, got {c}")
    if set(h1.terminals) != set(h1.nodes):
        raise PreconditionFailed("scaling requires every node to be a terminal")
    h2, s2 = _star_host(c, s1.setting)
    return graph_product(h1, s1, h2, s2)


def _fresh_node(existing: Iterable[NodeId], base: str = "x") -> NodeId:
    taken = set(existing)
    if base not in taken:
        return base
    i = 2
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def _shift_labels(edges: Iterable[TimeEdge], shift: int) -> frozenset[TimeEdge]:
    return frozenset(TimeEdge(e.u, e.v, e.label + shift) for e in edges)


def extend_with_nonterminal(
    host: HostGraph, s: StrategyProfile
) -> tuple[HostGraph, StrategyProfile]:
    """Add one non-terminal node to an equilibrium instance.

    Old labels shift up by one; the new node x gets a label-1 edge to the
    canonical node y and the latest label everywhere else, then buys (x,y,1).
    The equilibrium property, its type, and the setting carry over, adding
    exactly one bought edge. A spanning tree on latest-label host pairs, when
    present, is preserved.
    """
    s.validate(host)
    y = host.nodes[0]
    x = _fresh_node(host.nodes)
    top = host.lifetime + 1
    edges: list[TimeEdge] = [
        TimeEdge(e.u, e.v, e.label + 1) for e in host.time_edges()
    ]
    for v in host.nodes:
        edges.append(TimeEdge(x, v, 1 if v == y else top))
    new_host = HostGraph(
        graph=TemporalGraph((*host.nodes, x), edges), terminals=host.terminals
    )
    strategies: dict[NodeId, frozenset[TimeEdge]] = {
        agent: _shift_labels(bought, 1) for agent, bought in s.strategies.items()
    }
    strategies[x] = frozenset({TimeEdge(x, y, 1)})
    return new_host, StrategyProfile(setting=s.setting, strategies=strategies)


def extend_with_terminal(
    host: HostGraph, s: StrategyProfile
) -> tuple[HostGraph, StrategyProfile]:
    """Add one terminal node to an equilibrium instance.

    Splits on F, the realized edges carrying the realized graph's latest
    label. If F is a tree containing every terminal the realized graph must
    itself be a spanning tree, and the result is a fresh all-label-1 host
    whose star (centered on the canonical node) is the new equilibrium.
    Otherwise a component B of F, a non-buyer a inside B, and a second node b
    inside B are chosen canonically; labels shift up by one, the new terminal
    x hangs off a via a label-1 edge, b additionally buys (x,b) at the latest
    label, and everything else is unchanged. The output is re-verified as a
    greedy equilibrium (every Nash input yields a Nash output, which tests
    check separately).

    Raises:
        PreconditionFailed: the realized graph is empty, a stated property of
            the construction fails (flagging a broken input equilibrium), or
            the output fails greedy re-verification.
    """
    s.validate(host)
    graph = realized_graph(s, host)
    if graph.time_edge_count == 0:
        raise PreconditionFailed("cannot extend an empty realized graph")
    realized_top = graph.lifetime
    top_pairs = [p for p in graph.pairs() if realized_top in graph.labels(*p)]
    forest_nodes = sorted({n for p in top_pairs for n in p})
    components = connected_components(forest_nodes, top_pairs)
    for comp in components:
        inner = sum(1 for u, v in top_pairs if u in comp)
        if inner != len(comp) - 1:
            raise PreconditionFailed(
                "latest-label realized edges contain a cycle; "
                "input is not an equilibrium"
            )
    terminal_set = host.terminal_set
    f_is_tree = len(components) == 1
    f_has_all_terminals = f_is_tree and terminal_set <= components[0]

    if f_is_tree and f_has_all_terminals:
        n = host.node_count
        connected = len(connected_components(graph.nodes, list(graph.pairs()))) == 1
        if graph.time_edge_count != n - 1 or not connected:
            raise PreconditionFailed(
                "latest-label tree spans all terminals but the realized "
                "graph is not a spanning tree; input is not an equilibrium"
            )
        x = _fresh_node(host.nodes)
        nodes = (*host.nodes, x)
        edges = [TimeEdge(a, b, 1) for a, b in itertools.combinations(nodes, 2)]
        new_host = HostGraph(
            graph=TemporalGraph(nodes, edges),
            terminals=(*host.terminals, x),
        )
        center = min(nodes)
        strategies = {
            v: frozenset({TimeEdge(v, center, 1)}) for v in nodes if v != center
        }
        profile = StrategyProfile(setting=s.setting, strategies=strategies)
    else:
        chosen = None
        for comp in components:
            if not terminal_set <= comp:
                chosen = comp
                break
        if chosen is None:
            raise PreconditionFailed("no latest-label component misses a terminal")
        if not (terminal_set & chosen):
            raise PreconditionFailed(
                "latest-label component without any terminal; "
                "input is not an equilibrium"
            )
        comp_pairs = {p for p in top_pairs if p[0] in chosen}
        buyers = {
            agent
            for agent, bought in s.strategies.items()
            for e in bought
            if e.pair in comp_pairs and e.label == realized_top
        }
        non_buyers = sorted(set(chosen) - buyers)
        if not non_buyers:
            raise PreconditionFailed(
                "every node of the chosen component buys one of its edges; "
                "input is not an equilibrium"
            )
        a = non_buyers[0]
        b = min(set(chosen) - {a})
        x = _fresh_node(host.nodes)
        top = host.lifetime + 1
        edges = [TimeEdge(e.u, e.v, e.label + 1) for e in host.time_edges()]
        for v in host.nodes:
            edges.append(TimeEdge(x, v, 1 if v == a else top))
        new_host = HostGraph(
            graph=TemporalGraph((*host.nodes, x), edges),
            terminals=(*host.terminals, x),
        )
        strategies = {
            agent: _shift_labels(bought, 1) for agent, bought in s.strategies.items()
        }
        strategies[x] = frozenset({TimeEdge(x, a, 1)})
        strategies[b] = strategies.get(b, frozenset()) | {TimeEdge(x, b, top)}
        profile = StrategyProfile(setting=s.setting, strategies=strategies)

    check = is_greedy_equilibrium(profile, new_host)
    if not check.is_equilibrium:
        raise PreconditionFailed(
            "extended profile failed greedy re-verification; "
            "was the input an equilibrium?"
        )
    return new_host, profile


def _reaches_both(
    host: HostGraph,
    strategies: Mapping[NodeId, frozenset[TimeEdge]],
    agent: NodeId,
    extra: Iterable[TimeEdge],
    targets: frozenset[NodeId],
) -> bool:
    pool: set[TimeEdge] = set(extra)
    for other, bought in strategies.items():
        if other != agent:
            pool |= bought
    by_label: dict[int, list[TimeEdge]] = {}
    for e in pool:
        by_label.setdefault(e.label, []).append(e)
    groups = tuple((l, tuple(sorted(by_label[l]))) for l in sorted(by_label))
    arrival, _ = propagate_arrivals(groups, agent, targets=targets)
    return targets <= arrival.keys()


def two_terminal_ne(
    host: HostGraph, setting: Setting = Setting.GLOBAL
) -> StrategyProfile:
    """Equilibrium for any host with exactly two terminals, <= n edges.

    Non-terminals split by whether their cheapest edge toward t1 is no later
    than toward t2 (ties count as t1-side). Both sides nonempty gives a ring
    through both terminals with leaves hanging off their near terminal; one
    side empty gives a star at that side's terminal, or a two-edge bridge
    node when the star's latest spoke misses the direct terminal link, plus
    the bridge-repair loop: while the bridge agent can replace its two edges
    by one incident edge, do so and promote the next node to bridge duty.
    The result is verified exactly; label ties can make single edges
    droppable, in which case the witnessed removals are applied and
    verification reruns. The profile buys incident edges only, so it is an
    equilibrium in both settings.

    Raises:
        PreconditionFailed: terminal count differs from two, or the repaired
            profile fails to stabilize (not expected for any host).
    """
    if host.terminal_count != 2:
        raise PreconditionFailed("construction needs exactly two terminals")
    t1, t2 = host.terminals
    rest = [v for v in host.nodes if v not in (t1, t2)]
    m_side = [v for v in rest if host.min_label(t1, v) <= host.min_label(v, t2)]
    n_side = [v for v in rest if host.min_label(t1, v) > host.min_label(v, t2)]

    def descending(near: NodeId, side: list[NodeId]) -> list[NodeId]:
        return sorted(side, key=lambda v: (-host.min_label(near, v), v))

    strategies: dict[NodeId, frozenset[TimeEdge]] = {}

    def buy(agent: NodeId, *bought: TimeEdge) -> None:
        strategies[agent] = frozenset(bought)

    def edge(a: NodeId, b: NodeId) -> TimeEdge:
        return TimeEdge(a, b, host.min_label(a, b))

    if m_side and n_side:
        ms = descending(t1, m_side)
        ns = descending(t2, n_side)
        buy(t1, edge(t1, ms[0]))
        buy(ms[0], edge(ms[0], t2))
        buy(t2, edge(t2, ns[0]))
        buy(ns[0], edge(ns[0], t1))
        for v in ms[1:]:
            buy(v, edge(v, t1))
        for v in ns[1:]:
            buy(v, edge(v, t2))
    elif m_side or n_side:
        near, far = (t1, t2) if m_side else (t2, t1)
        mids = descending(near, m_side or n_side)
        for v in mids:
            buy(v, edge(v, near))
        buy(far, edge(far, near))
        gate = host.min_label(near, far)
        if host.min_label(near, mids[0]) > gate:
            buy(mids[0], edge(mids[0], near), edge(mids[0], far))
            targets = frozenset((near, far))
            j = 0
            while True:
                bridge = mids[j]
                repair = None
                for w in sorted(host.nodes):
                    if w == bridge:
                        continue
                    candidate = edge(bridge, w)
                    if _reaches_both(host, strategies, bridge, (candidate,), targets):
                        repair = candidate
                        break
                if repair is None:
                    break
                buy(bridge, repair)
                j += 1
                if j >= len(mids):
                    raise PreconditionFailed(
                        "bridge repair ran past the last candidate node"
                    )
                nxt = mids[j]
                if host.min_label(near, nxt) <= gate:
                    break
                buy(nxt, edge(nxt, near), edge(nxt, far))
    else:
        buy(t2, edge(t2, t1))

    profile = StrategyProfile(setting=Setting.GLOBAL, strategies=strategies)
    for _ in range(host.node_count + 5):
        report = is_nash_equilibrium(profile, host)
        if report.verdict is Verdict.EQUILIBRIUM:
            break
        assert report.witness is not None
        profile = profile.with_strategy(report.witness.agent, report.witness.strategy)
    else:
        raise PreconditionFailed("two-terminal profile failed to stabilize")
    for agent, bought in profile.strategies.items():
        for e in bought:
            if not e.touches(agent):
                raise PreconditionFailed(
                    "stabilized profile bought a non-incident edge; "
                    "cannot serve both settings"
                )
    return profile.with_setting(setting)


def _k2_instance(setting: Setting) -> tuple[HostGraph, StrategyProfile]:
    host = HostGraph(
        graph=TemporalGraph(("0", "1"), (TimeEdge("0", "1", 1),)),
        terminals=("0", "1"),
    )
    profile = StrategyProfile(
        setting=setting, strategies={"0": frozenset({TimeEdge("0", "1", 1)})}
    )
    return host, profile


def hypercube_equilibrium(d: int) -> tuple[HostGraph, StrategyProfile]:
    """d-fold product of the single-edge two-terminal instance.

    Yields 2^d nodes (ids are bit strings), all terminals, and a local
    equilibrium buying d * 2^(d-1) time edges: the realized graph is the
    d-dimensional hypercube with dimension i bought at label i+1.

    Raises:
        PreconditionFailed: d < 1.
    """
    if d < 1:
        raise PreconditionFailed(f"need d >= 1, got {d}")
    host, profile = _k2_instance(Setting.LOCAL)
    base_host, base_profile = _k2_instance(Setting.LOCAL)
    for _ in range(1, d):
        host, profile = graph_product(host, profile, base_host, base_profile)
        mapping: dict[NodeId, NodeId] = {}
        for node in host.nodes:
            parts = ProductNodeId.parse(node)
            mapping[node] = parts.left + parts.right
        host, profile = relabel_instance(host, profile, mapping)
    return host, profile


@dataclass(frozen=True, order=True)
class DenseCycleParams:
    """Coordinates of a dense-cycle node: bag, pair index, and parity."""

    x: int
    bag: int
    pair: int
    primed: bool

    def __post_init__(self) -> None:
        if self.x < 2 or self.x % 2:
            raise PreconditionFailed(f"x must be even and >= 2, got {self.x}")
        if not 0 <= self.bag < 2 * self.x:
            raise PreconditionFailed(f"bag {self.bag} out of range")
        if not 0 <= self.pair < self.x // 2:
            raise PreconditionFailed(f"pair {self.pair} out of range")

    def node_id(self) -> NodeId:
        kind = "w" if self.primed else "v"
        return f"{kind}{self.bag:02d}.{self.pair:02d}"

    @classmethod
    def parse(cls, x: int, node_id: NodeId) -> "DenseCycleParams":
        kind, rest = node_id[0], node_id[1:]
        bag, pair = rest.split(".")
        return cls(x=x, bag=int(bag), pair=int(pair), primed=kind == "w")


@dataclass(frozen=True)
class DenseCycleInstance:
    host: HostGraph
    profile: StrategyProfile
    cycle_graph: TemporalGraph
    connected_graph: TemporalGraph


def _dense_cycle_graphs(x: int) -> tuple[list[NodeId], list[TimeEdge], list[list[TimeEdge]]]:
    """Node ids, cross-bag cycle edges, and per-bag filler paths."""
    bags = 2 * x
    half = x // 2

    def v(i: int, j: int) -> NodeId:
        return DenseCycleParams(x, i % bags, j, primed=False).node_id()

    def w(i: int, j: int) -> NodeId:
        return DenseCycleParams(x, i % bags, j, primed=True).node_id()

    nodes = [v(i, j) for i in range(bags) for j in range(half)]
    nodes += [w(i, j) for i in range(bags) for j in range(half)]
    cycle_edges: list[TimeEdge] = []
    for i in range(bags):
        for j in range(half):
            for k in range(half):
                cycle_edges.append(
                    TimeEdge(v(i, j), w(i + 1, k), (2 * (k - j)) % x + 1)
                )
                cycle_edges.append(
                    TimeEdge(w(i, j), v(i + 1, k), (2 * (k - j) + 1) % x + 1)
                )
    bag_paths: list[list[TimeEdge]] = []
    for i in range(bags):
        path = []
        for j in range(half):
            path.append(TimeEdge(v(i, j), w(i, j), x + 1))
            if j < half - 1:
                path.append(TimeEdge(w(i, j), v(i, j + 1), x + 1))
        bag_paths.append(path)
    return nodes, cycle_edges, bag_paths


def _follow_labels(
    graph: TemporalGraph, start: NodeId, labels: Iterable[int]
) -> list[TimeEdge]:
    """Walk from ``start`` taking the unique incident edge per label."""
    path = []
    at = start
    for label in labels:
        nxt = [
            e
            for e in graph.time_edges()
            if e.label == label and e.touches(at)
        ]
        if len(nxt) != 1:
            raise PreconditionFailed(
                f"expected exactly one label-{label} edge at {at!r}, got {len(nxt)}"
            )
        path.append(nxt[0])
        at = nxt[0].other(at)
    return path


def dense_cycle_instance(x: int) -> DenseCycleInstance:
    """Dense-cycle host, equilibrium profile, and both underlying graphs.

    The cycle graph G has 2x^2 nodes in 2x bags and x^3 cross-bag edges whose
    labels encode pair offsets; G' adds a label-(x+1) path inside every bag
    (2x(x-1) edges). The host completes G' with label x+2 and makes every
    node a terminal. In the (global) profile each plain node buys its unique
    forward path into the opposite bag and the first primed node of each bag
    buys the filler path of the opposite bag, so the realized graph is
    exactly G'.

    Raises:
        PreconditionFailed: x odd or < 2.
    """
    if x < 2 or x % 2:
        raise PreconditionFailed(f"x must be even and >= 2, got {x}")
    bags = 2 * x
    half = x // 2
    nodes, cycle_edges, bag_paths = _dense_cycle_graphs(x)
    cycle_graph = TemporalGraph(nodes, cycle_edges)
    filler = [e for path in bag_paths for e in path]
    connected_graph = TemporalGraph(nodes, [*cycle_edges, *filler])
    known_pairs = {e.pair for e in cycle_edges} | {e.pair for e in filler}
    host_edges = [*cycle_edges, *filler]
    for a, b in itertools.combinations(sorted(nodes), 2):
        if (a, b) not in known_pairs:
            host_edges.append(TimeEdge(a, b, x + 2))
    host = HostGraph(graph=TemporalGraph(nodes, host_edges), terminals=nodes)
    strategies: dict[NodeId, frozenset[TimeEdge]] = {}
    for i in range(bags):
        for j in range(half):
            plain = DenseCycleParams(x, i, j, primed=False).node_id()
            strategies[plain] = frozenset(
                _follow_labels(cycle_graph, plain, range(1, x + 1))
            )
        first_primed = DenseCycleParams(x, i, 0, primed=True).node_id()
        strategies[first_primed] = frozenset(bag_paths[(i + x) % bags])
    profile = StrategyProfile(setting=Setting.GLOBAL, strategies=strategies)
    return DenseCycleInstance(
        host=host,
        profile=profile,
        cycle_graph=cycle_graph,
        connected_graph=connected_graph,
    )


@dataclass(frozen=True)
class DenseCycleChecks:
    """Enumerated structural facts about the dense-cycle graphs."""

    x: int
    node_count: int
    cycle_edge_count: int
    connected_edge_count: int
    incident_pattern_ok: bool
    unique_opposite_path_ok: bool
    unique_beyond_path_ok: bool
    partition_ok: bool
    connected_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.incident_pattern_ok
            and self.unique_opposite_path_ok
            and self.unique_beyond_path_ok
            and self.partition_ok
            and self.connected_ok
        )


def _increasing_paths(
    adjacency: Mapping[NodeId, list[TimeEdge]], start: NodeId
) -> Iterator[tuple[NodeId, tuple[TimeEdge, ...]]]:
    """All simple paths with strictly increasing labels, yielded per prefix."""

    def walk(at: NodeId, seen: frozenset[NodeId], last: int, acc: tuple[TimeEdge, ...]):
        for e in adjacency[at]:
            if e.label <= last:
                continue
            nxt = e.other(at)
            if nxt in seen:
                continue
            yield nxt, (*acc, e)
            yield from walk(nxt, seen | {nxt}, e.label, (*acc, e))

    yield from walk(start, frozenset({start}), 0, ())


def dense_cycle_lemma_checks(x: int) -> DenseCycleChecks:
    """Verify the dense-cycle structure claims by direct enumeration.

    Checks, on the cycle graph G: every node has exactly one incident edge
    per label 1..x, plain nodes crossing forward on odd labels and backward
    on even ones (primed nodes mirrored); every node has exactly one temporal
    path ending in the opposite bag and exactly one ending in the bag after
    the opposite one; the plain nodes' opposite-bag paths partition the edges
    of G. Within G all temporal paths strictly increase, because a label
    repeat would have to reuse the unique incident edge of that label.
    Finally checks that G' is temporally connected.
    """
    instance = dense_cycle_instance(x)
    graph = instance.cycle_graph
    bags = 2 * x

    def coords(node: NodeId) -> DenseCycleParams:
        return DenseCycleParams.parse(x, node)

    incident: dict[NodeId, list[TimeEdge]] = {n: [] for n in graph.nodes}
    for e in graph.time_edges():
        incident[e.u].append(e)
        incident[e.v].append(e)
    for n in incident:
        incident[n].sort()

    pattern_ok = True
    for node in graph.nodes:
        here = coords(node)
        by_label: dict[int, list[TimeEdge]] = {}
        for e in incident[node]:
            by_label.setdefault(e.label, []).append(e)
        if sorted(by_label) != list(range(1, x + 1)) or any(
            len(v) != 1 for v in by_label.values()
        ):
            pattern_ok = False
            break
        for label, (e,) in by_label.items():
            there = coords(e.other(node))
            forward = there.bag == (here.bag + 1) % bags
            backward = there.bag == (here.bag - 1) % bags
            label_odd = label % 2 == 1
            # plain nodes cross forward on odd labels; primed nodes on even
            expect_forward = label_odd != here.primed
            if not (forward if expect_forward else backward):
                pattern_ok = False
                break
        if not pattern_ok:
            break

    opposite_ok = True
    beyond_ok = True
    partition: list[frozenset[TimeEdge]] = []
    for node in graph.nodes:
        here = coords(node)
        opposite_bag = (here.bag + x) % bags
        beyond_bag = (here.bag + x + 1) % bags
        to_opposite = []
        to_beyond = []
        for end, path in _increasing_paths(incident, node):
            end_bag = coords(end).bag
            if end_bag == opposite_bag:
                to_opposite.append(path)
            elif end_bag == beyond_bag:
                to_beyond.append(path)
        if len(to_opposite) != 1:
            opposite_ok = False
        if len(to_beyond) != 1:
            beyond_ok = False
        if not here.primed and to_opposite:
            partition.append(frozenset(to_opposite[0]))

    all_edges = frozenset(graph.time_edges())
    covered: set[TimeEdge] = set()
    partition_ok = True
    for part in partition:
        if part & covered:
            partition_ok = False
            break
        covered |= part
    partition_ok = partition_ok and covered == all_edges

    all_nodes = frozenset(graph.nodes)
    connected_ok = True
    groups = instance.connected_graph.label_groups()
    for node in graph.nodes:
        arrival, _ = propagate_arrivals(groups, node, targets=all_nodes)
        if not all_nodes <= arrival.keys():
            connected_ok = False
            break

    return DenseCycleChecks(
        x=x,
        node_count=graph.node_count,
        cycle_edge_count=graph.time_edge_count,
        connected_edge_count=instance.connected_graph.time_edge_count,
        incident_pattern_ok=pattern_ok,
        unique_opposite_path_ok=opposite_ok,
        unique_beyond_path_ok=beyond_ok,
        partition_ok=partition_ok,
        connected_ok=connected_ok,
    )


def _label2_tree_candidate(host: HostGraph) -> StrategyProfile | None:
    """Spanning tree on label-2 pairs, every child buying its parent edge."""
    pairs2 = [
        (a, b)
        for a, b in itertools.combinations(host.nodes, 2)
        if 2 in host.labels(a, b)
    ]
    if len(connected_components(host.nodes, pairs2)) != 1:
        return None
    root = host.terminals[0]
    parent: dict[NodeId, NodeId] = {root: root}
    frontier = [root]
    adjacency: dict[NodeId, list[NodeId]] = {n: [] for n in host.nodes}
    for a, b in pairs2:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for n in adjacency:
        adjacency[n].sort()
    while frontier:
        current = frontier.pop(0)
        for nxt in adjacency[current]:
            if nxt not in parent:
                parent[nxt] = current
                frontier.append(nxt)
    strategies = {
        child: frozenset({TimeEdge(child, via, 2)})
        for child, via in parent.items()
        if child != via
    }
    return StrategyProfile(setting=Setting.GLOBAL, strategies=strategies)


def _double_star_candidate(host: HostGraph) -> StrategyProfile | None:
    """All-label-1 tree: outsiders attach to the root terminal, the root's
    label-2 component attaches to a canonical outside node."""
    pairs2 = [
        (a, b)
        for a, b in itertools.combinations(host.nodes, 2)
        if 2 in host.labels(a, b)
    ]
    root = host.terminals[0]
    components = connected_components(host.nodes, pairs2)
    root_comp = next(c for c in components if root in c)
    outside = sorted(set(host.nodes) - root_comp)
    if not outside:
        return None
    hub = outside[0]
    strategies: dict[NodeId, frozenset[TimeEdge]] = {}
    for v in outside:
        strategies[v] = frozenset({TimeEdge(v, root, 1)})
    for u in sorted(root_comp - {root}):
        strategies[u] = frozenset({TimeEdge(u, hub, 1)})
    return StrategyProfile(setting=Setting.GLOBAL, strategies=strategies)


def _exhaustive_tree_candidates(
    host: HostGraph, max_states: int
) -> Iterator[StrategyProfile]:
    """All spanning trees of time edges with endpoint ownership, canonical order."""
    n = host.node_count
    pool = sorted(host.time_edges())
    states = 0
    for combo in itertools.combinations(pool, n - 1):
        states += 1
        if states > max_states:
            raise SearchTooLarge(
                f"spanning-tree enumeration exceeded {max_states} states"
            )
        pairs = {e.pair for e in combo}
        if len(pairs) != n - 1:
            continue
        if len(connected_components(host.nodes, pairs)) != 1:
            continue
        for owners in itertools.product(*[(e.u, e.v) for e in combo]):
            strategies: dict[NodeId, set[TimeEdge]] = {}
            for owner, e in zip(owners, combo):
                strategies.setdefault(owner, set()).add(e)
            yield StrategyProfile(
                setting=Setting.GLOBAL,
                strategies={a: frozenset(es) for a, es in strategies.items()},
            )


def lifetime2_tree_ne(
    host: HostGraph, max_nodes: int = 8, max_states: int = 200_000
) -> StrategyProfile | None:
    """Spanning-tree equilibrium for hosts whose lifetime is at most 2.

    Tries two constructive candidates first: if the label-2 pairs connect
    every node, a label-2 spanning tree where each child owns its parent edge
    (dropping the edge cuts the owner off from the root terminal); otherwise
    every pair crossing label-2 components carries label 1, and a double star
    through the root terminal and one outside hub works the same way. Both
    are exact equilibria in both settings by construction, but every
    candidate is verified before being returned. If neither verifies, falls
    back to exhaustive spanning-tree-with-ownership search (guarded); that
    search exhausting without a hit returns None, a counterexample to the
    lifetime-2 guarantee for the caller to report.

    Raises:
        PreconditionFailed: host lifetime exceeds 2.
        SearchTooLarge: fallback search needed but the host exceeds
            ``max_nodes`` or ``max_states``.
    """
    if host.lifetime > 2:
        raise PreconditionFailed("construction applies to lifetime <= 2 hosts")
    if host.node_count == 1:
        return StrategyProfile.empty(Setting.GLOBAL)

    def verified(candidate: StrategyProfile | None) -> StrategyProfile | None:
        if candidate is None:
            return None
        graph = realized_graph(candidate, host)
        if graph.time_edge_count != host.node_count - 1:
            return None
        if len(connected_components(host.nodes, list(graph.pairs()))) != 1:
            return None
        report = is_nash_equilibrium(candidate, host)
        return candidate if report.verdict is Verdict.EQUILIBRIUM else None

    for candidate in (_label2_tree_candidate(host), _double_star_candidate(host)):
        found = verified(candidate)
        if found is not None:
            return found
    if host.node_count > max_nodes:
        raise SearchTooLarge(
            f"no constructive candidate verified and n={host.node_count} "
            f"exceeds the exhaustive guard {max_nodes}"
        )
    for candidate in _exhaustive_tree_candidates(host, max_states):
        found = verified(candidate)
        if found is not None:
            return found
    return None


def random_host(
    n: int,
    k: int,
    seed: int,
    max_label: int | None = None,
    extra_label_prob: float = 0.0,
) -> HostGraph:
    """Seeded random complete host with uniform labels, then normalized.

    ``max_label`` defaults to n; ``extra_label_prob`` is the chance of each
    additional label on a pair (geometric). Terminals are a seeded sample.
    """
    if n < 1 or not 1 <= k <= n:
        raise PreconditionFailed(f"bad size parameters n={n}, k={k}")
    rng = random.Random(seed)
    width = len(str(n - 1)) if n > 1 else 1
    nodes = [f"n{i:0{width}d}" for i in range(n)]
    cap = max_label if max_label is not None else n
    edges: list[TimeEdge] = []
    for a, b in itertools.combinations(nodes, 2):
        labels = {rng.randint(1, cap)}
        while rng.random() < extra_label_prob:
            labels.add(rng.randint(1, cap))
        edges.extend(TimeEdge(a, b, l) for l in labels)
    terminals = rng.sample(nodes, k)
    return validate_and_normalize_host(TemporalGraph(nodes, edges), terminals)
