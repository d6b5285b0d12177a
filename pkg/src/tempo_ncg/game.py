"""Strategies, costs, improving-response search, and equilibrium verification.

Agents are the nodes of a host graph. Each agent buys a set of host time
edges; the union forms the realized temporal graph. An agent's cost is the
pair (terminals it cannot reach, edges it buys), compared lexicographically:
reaching terminals always dominates saving edges.

Two solution concepts are supported. A greedy equilibrium (GE) admits no
improving single-edge add or remove; a Nash equilibrium (NE) admits no
improving replacement strategy at all, so every NE is a GE. Swap moves are
never considered by the greedy search; the exact NE search subsumes them.

Exactness of the NE search rests on two facts. First, on a complete host an
agent missing a terminal always has an improving response (direct edges to
terminals), so only agents that currently reach everything need a subset
search, and for those only strictly smaller strategies can win, capping the
search at |S_v| - 1 edges. Second, any inclusion-minimal strategy achieving a
reachability goal can be ordered so that every edge strictly improves the
earliest-arrival map of the prefix before it (an edge that never improves the
map is redundant, contradicting minimality), so depth-first search over
arrival-improving extensions visits a witness whenever one exists.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

from .core import (
    HostGraph,
    NodeId,
    TemporalGraph,
    TimeEdge,
    propagate_arrivals,
)
from .errors import (
    InvalidPurchase,
    NotOwned,
    NotSimple,
    SettingMismatch,
    UnknownNode,
)

_INF = float("inf")


class Setting(str, Enum):
    """Edge-buying restriction: local agents buy incident edges only."""

    LOCAL = "local"
    GLOBAL = "global"


class EquilibriumKind(str, Enum):
    """Which solution concept a verified profile satisfies."""

    NASH = "ne"
    GREEDY = "ge"


@dataclass(frozen=True)
class StrategyProfile:
    """One strategy set per agent, under a fixed setting.

    Empty strategies are dropped during normalization, so profiles that differ
    only by explicit-versus-implicit empty sets compare equal. Agents without
    an entry buy nothing.
    """

    setting: Setting
    strategies: Mapping[NodeId, frozenset[TimeEdge]]

    def __post_init__(self) -> None:
        cleaned = {
            agent: frozenset(edges)
            for agent, edges in sorted(self.strategies.items())
            if edges
        }
        object.__setattr__(self, "strategies", MappingProxyType(cleaned))

    def __reduce__(self):
        # Mapping proxies cannot be pickled; rebuild from a plain dict.
        return (self.__class__, (self.setting, dict(self.strategies)))

    @classmethod
    def empty(cls, setting: Setting) -> "StrategyProfile":
        return cls(setting=setting, strategies={})

    @property
    def buyers(self) -> tuple[NodeId, ...]:
        """Agents with at least one purchase, canonical order."""
        return tuple(self.strategies)

    def strategy(self, agent: NodeId) -> frozenset[TimeEdge]:
        return self.strategies.get(agent, frozenset())

    def with_strategy(self, agent: NodeId, edges: Iterable[TimeEdge]) -> "StrategyProfile":
        updated = dict(self.strategies)
        new_set = frozenset(edges)
        if new_set:
            updated[agent] = new_set
        else:
            updated.pop(agent, None)
        return StrategyProfile(setting=self.setting, strategies=updated)

    def with_setting(self, setting: Setting) -> "StrategyProfile":
        return StrategyProfile(setting=setting, strategies=dict(self.strategies))

    def bought_edges(self) -> frozenset[TimeEdge]:
        """Union of all strategies (duplicate purchases merge)."""
        union: set[TimeEdge] = set()
        for edges in self.strategies.values():
            union |= edges
        return frozenset(union)

    def total_purchases(self) -> int:
        """Sum of strategy sizes; counts duplicate purchases twice."""
        return sum(len(edges) for edges in self.strategies.values())

    def relabel(self, mapping: Mapping[NodeId, NodeId]) -> "StrategyProfile":
        return StrategyProfile(
            setting=self.setting,
            strategies={
                mapping[agent]: frozenset(
                    TimeEdge(mapping[e.u], mapping[e.v], e.label) for e in edges
                )
                for agent, edges in self.strategies.items()
            },
        )

    def validate(self, host: HostGraph) -> None:
        """Check agent membership, host membership, and locality.

        Raises:
            UnknownNode: an agent is not a host node.
            InvalidPurchase: a bought time edge is absent from the host, or a
                local agent buys a non-incident edge.
        """
        for agent, edges in self.strategies.items():
            if agent not in host.graph:
                raise UnknownNode(f"agent {agent!r} is not a node of the host")
            for edge in edges:
                if not host.has_time_edge(edge):
                    raise InvalidPurchase(f"{edge} is not offered by the host")
                if self.setting is Setting.LOCAL and not edge.touches(agent):
                    raise InvalidPurchase(
                        f"local agent {agent!r} cannot buy non-incident edge {edge}"
                    )


@dataclass(frozen=True, order=True)
class CostBreakdown:
    """Lexicographic agent cost: unreached terminals first, then edges.

    Field order matters: dataclass ordering compares (unreached, edges),
    which is the game's cost order. ``numeric`` reproduces the scalar form
    |S_v| + C * unreached; for C > |Λ_H| the two orders coincide.
    """

    unreached_terminals: int
    edges_bought: int

    @property
    def total(self) -> tuple[int, int]:
        return (self.unreached_terminals, self.edges_bought)

    def numeric(self, c: int) -> int:
        return self.edges_bought + c * self.unreached_terminals


@dataclass(frozen=True)
class Certificate:
    """A named size bound evaluated against the realized edge count."""

    value: int
    bound: float
    holds: bool


class Verdict(str, Enum):
    EQUILIBRIUM = "equilibrium"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DeviationWitness:
    """An agent together with a strategy that strictly improves its cost."""

    agent: NodeId
    strategy: frozenset[TimeEdge]


@dataclass(frozen=True)
class VerificationReport:
    verdict: Verdict
    witness: DeviationWitness | None = None
    certificates: Mapping[str, Certificate] = field(default_factory=dict)
    states_examined: int = 0

    @property
    def is_equilibrium(self) -> bool:
        return self.verdict is Verdict.EQUILIBRIUM


@dataclass(frozen=True)
class SearchOutcome:
    """Result of an improving-response search.

    ``response`` is None when no improving strategy was found; ``exact`` tells
    whether that none is a proof (search space fully covered) or only a
    budget-limited heuristic answer. A found response is always valid.
    """

    response: frozenset[TimeEdge] | None
    exact: bool
    states_examined: int


@dataclass(frozen=True)
class GreedyMove:
    """A single-edge strategy change (action is "add" or "remove")."""

    action: str
    edge: TimeEdge
    new_strategy: frozenset[TimeEdge]


@dataclass(frozen=True)
class DynamicsResult:
    profile: StrategyProfile
    converged: bool
    rounds: int
    report: VerificationReport | None


def realized_graph(s: StrategyProfile, host: HostGraph) -> TemporalGraph:
    """Union of all bought time edges over the host's node set."""
    s.validate(host)
    return TemporalGraph(host.nodes, s.bought_edges())


def _require_node(host: HostGraph, v: NodeId) -> None:
    if v not in host.graph:
        raise UnknownNode(f"{v!r} is not a node of the host")


def _unreached_count(
    groups, source: NodeId, host: HostGraph, extra: Iterable[TimeEdge] = ()
) -> int:
    arrival, _ = propagate_arrivals(
        groups, source, extra=extra, targets=host.terminal_set
    )
    return sum(1 for t in host.terminals if t not in arrival)


def agent_cost(v: NodeId, s: StrategyProfile, host: HostGraph) -> CostBreakdown:
    """Cost of agent ``v`` under profile ``s`` (its own reachability counts)."""
    _require_node(host, v)
    graph = realized_graph(s, host)
    unreached = _unreached_count(graph.label_groups(), v, host)
    return CostBreakdown(unreached_terminals=unreached, edges_bought=len(s.strategy(v)))


def social_cost(s: StrategyProfile, host: HostGraph) -> CostBreakdown:
    """Sum of all agent breakdowns.

    Edges bought by two agents count twice here; at any equilibrium strategies
    are disjoint, so the edge component then equals the realized edge count.
    """
    graph = realized_graph(s, host)
    groups = graph.label_groups()
    unreached_total = sum(_unreached_count(groups, v, host) for v in host.nodes)
    return CostBreakdown(
        unreached_terminals=unreached_total, edges_bought=s.total_purchases()
    )


def _setting_candidates(
    host: HostGraph, v: NodeId, setting: Setting, exclude: frozenset[TimeEdge]
) -> list[TimeEdge]:
    """Host time edges the agent may buy, minus ``exclude``, canonical order."""
    out = []
    for edge in host.time_edges():
        if edge in exclude:
            continue
        if setting is Setting.LOCAL and not edge.touches(v):
            continue
        out.append(edge)
    out.sort()
    return out


def _improves_arrival(arrival: dict[NodeId, int], edge: TimeEdge) -> bool:
    au = arrival.get(edge.u, _INF)
    av = arrival.get(edge.v, _INF)
    return (au <= edge.label < av) or (av <= edge.label < au)


def find_improving_response(
    v: NodeId,
    s: StrategyProfile,
    host: HostGraph,
    cap: int | None = None,
    budget: int | None = None,
) -> SearchOutcome:
    """Search for a strategy that strictly lowers ``v``'s cost.

    The search runs iterative deepening over response size r = 0..cap and at
    each size explores only extension edges that strictly improve the current
    earliest-arrival map from ``v`` (see module docstring for why this is
    complete for inclusion-minimal witnesses). The returned response, if any,
    is the first witness of minimum size in canonical order.

    ``cap`` defaults to |S_v| - 1 when v already reaches every terminal (the
    exact threshold) and to the terminal count otherwise (direct edges always
    fit in that budget). ``budget`` caps examined candidate sets; exhausting
    it can only downgrade a none-result to inexact, never flip a verdict.
    """
    _require_node(host, v)
    s.validate(host)
    own = s.strategy(v)
    e0 = len(own)
    others: set[TimeEdge] = set()
    for agent, edges in s.strategies.items():
        if agent != v:
            others |= edges
    base: dict[int, list[TimeEdge]] = {}
    for edge in others:
        base.setdefault(edge.label, []).append(edge)
    groups = tuple(
        (label, tuple(sorted(base[label]))) for label in sorted(base)
    )
    k = host.terminal_count
    current_unreached = _unreached_count(groups, v, host, extra=own)
    current = CostBreakdown(current_unreached, e0)
    if cap is None:
        cap = e0 - 1 if current_unreached == 0 else k
    r_max = min(cap, e0 - 1) if current_unreached == 0 else cap
    exact_threshold = (e0 - 1) if current_unreached == 0 else k
    if r_max < 0:
        return SearchOutcome(response=None, exact=True, states_examined=0)

    candidates = _setting_candidates(host, v, s.setting, frozenset(others))
    terminal_set = host.terminal_set
    examined = 0
    exhausted = False

    def cost_of(extra: tuple[TimeEdge, ...]) -> CostBreakdown:
        arrival, _ = propagate_arrivals(groups, v, extra=extra, targets=terminal_set)
        unreached = sum(1 for t in host.terminals if t not in arrival)
        return CostBreakdown(unreached, len(extra))

    if cost_of(()) < current:
        return SearchOutcome(response=frozenset(), exact=True, states_examined=1)

    for r in range(1, r_max + 1):
        visited: set[frozenset[TimeEdge]] = set()

        def dfs(chosen: tuple[TimeEdge, ...], arrival: dict[NodeId, int]) -> frozenset[TimeEdge] | None:
            nonlocal examined, exhausted
            for edge in candidates:
                if exhausted:
                    return None
                if edge in chosen or not _improves_arrival(arrival, edge):
                    continue
                state = frozenset((*chosen, edge))
                if state in visited:
                    continue
                visited.add(state)
                examined += 1
                if budget is not None and examined > budget:
                    exhausted = True
                    return None
                extended = (*chosen, edge)
                new_arrival, _ = propagate_arrivals(groups, v, extra=extended)
                if len(extended) == r:
                    unreached = sum(1 for t in host.terminals if t not in new_arrival)
                    if CostBreakdown(unreached, r) < current:
                        return state
                else:
                    found = dfs(extended, new_arrival)
                    if found is not None:
                        return found
            return None

        start_arrival, _ = propagate_arrivals(groups, v)
        found = dfs((), start_arrival)
        if found is not None:
            return SearchOutcome(response=found, exact=True, states_examined=examined)
        if exhausted:
            return SearchOutcome(response=None, exact=False, states_examined=examined)
    return SearchOutcome(
        response=None,
        exact=cap >= exact_threshold,
        states_examined=examined,
    )


def _direct_edge_witness(
    v: NodeId, s: StrategyProfile, host: HostGraph, graph: TemporalGraph
) -> DeviationWitness:
    """Witness for an agent that misses a terminal: add one direct edge."""
    arrival, _ = propagate_arrivals(graph.label_groups(), v, targets=host.terminal_set)
    missing = [t for t in host.terminals if t not in arrival]
    target = missing[0]
    edge = TimeEdge(v, target, host.min_label(v, target))
    return DeviationWitness(agent=v, strategy=s.strategy(v) | {edge})


def _assert_improving(
    witness: DeviationWitness, s: StrategyProfile, host: HostGraph
) -> None:
    # Report invariant: a refutation witness must strictly improve its agent.
    before = agent_cost(witness.agent, s, host)
    after = agent_cost(
        witness.agent, s.with_strategy(witness.agent, witness.strategy), host
    )
    if not after < before:
        raise AssertionError(
            f"internal error: witness for {witness.agent!r} does not improve "
            f"({before.total} -> {after.total})"
        )


def is_nash_equilibrium(
    s: StrategyProfile, host: HostGraph, budget: int | None = None
) -> VerificationReport:
    """Exact NE verification (subject to ``budget``).

    Agents missing a terminal are refuted immediately with a direct-edge add;
    all others run the exact improving-response search with cap = |S_v| - 1.
    The verdict is inconclusive only if some agent's search hit the budget
    and no other agent was refuted outright.
    """
    s.validate(host)
    graph = realized_graph(s, host)
    groups = graph.label_groups()
    examined_total = 0
    inconclusive = False
    for v in host.nodes:
        if _unreached_count(groups, v, host) > 0:
            witness = _direct_edge_witness(v, s, host, graph)
            _assert_improving(witness, s, host)
            return VerificationReport(
                verdict=Verdict.REFUTED,
                witness=witness,
                states_examined=examined_total,
            )
        outcome = find_improving_response(v, s, host, budget=budget)
        examined_total += outcome.states_examined
        if outcome.response is not None:
            witness = DeviationWitness(agent=v, strategy=outcome.response)
            _assert_improving(witness, s, host)
            return VerificationReport(
                verdict=Verdict.REFUTED,
                witness=witness,
                states_examined=examined_total,
            )
        if not outcome.exact:
            inconclusive = True
    if inconclusive:
        return VerificationReport(
            verdict=Verdict.INCONCLUSIVE, states_examined=examined_total
        )
    return VerificationReport(
        verdict=Verdict.EQUILIBRIUM,
        certificates=equilibrium_certificates(s, host, kind=EquilibriumKind.NASH),
        states_examined=examined_total,
    )


def direct_terminal_profile(host: HostGraph, setting: Setting) -> StrategyProfile:
    """Every node buys a cheapest direct edge to every terminal but itself.

    The realized graph is a terminal spanner, so this is a convenient valid
    starting point for dynamics in either setting (all purchases incident).
    """
    strategies: dict[NodeId, frozenset[TimeEdge]] = {}
    for v in host.nodes:
        bought = frozenset(
            TimeEdge(v, t, host.min_label(v, t)) for t in host.terminals if t != v
        )
        if bought:
            strategies[v] = bought
    return StrategyProfile(setting=setting, strategies=strategies)


def greedy_improving_response(
    v: NodeId, s: StrategyProfile, host: HostGraph
) -> GreedyMove | None:
    """First improving single-edge add or remove, adds scanned first.

    An add must newly reach at least one terminal; a remove must lose none.
    Those conditions are exactly strict lexicographic cost improvement for
    single-edge changes. Swaps are intentionally not considered.
    """
    _require_node(host, v)
    s.validate(host)
    own = s.strategy(v)
    realized = s.bought_edges()
    base: dict[int, list[TimeEdge]] = {}
    for edge in realized:
        base.setdefault(edge.label, []).append(edge)
    groups = tuple((label, tuple(sorted(base[label]))) for label in sorted(base))
    current_unreached = _unreached_count(groups, v, host)
    if current_unreached > 0:
        for edge in _setting_candidates(host, v, s.setting, frozenset(realized)):
            if _unreached_count(groups, v, host, extra=(edge,)) < current_unreached:
                return GreedyMove(action="add", edge=edge, new_strategy=own | {edge})
    others: set[TimeEdge] = set()
    for agent, edges in s.strategies.items():
        if agent != v:
            others |= edges
    other_groups_base: dict[int, list[TimeEdge]] = {}
    for edge in others:
        other_groups_base.setdefault(edge.label, []).append(edge)
    other_groups = tuple(
        (label, tuple(sorted(other_groups_base[label])))
        for label in sorted(other_groups_base)
    )
    for edge in sorted(own):
        remaining = tuple(e for e in sorted(own) if e != edge)
        if (
            _unreached_count(other_groups, v, host, extra=remaining)
            == current_unreached
        ):
            return GreedyMove(action="remove", edge=edge, new_strategy=own - {edge})
    return None


def is_greedy_equilibrium(s: StrategyProfile, host: HostGraph) -> VerificationReport:
    """GE verification: no agent has an improving single-edge add or remove."""
    s.validate(host)
    for v in host.nodes:
        move = greedy_improving_response(v, s, host)
        if move is not None:
            witness = DeviationWitness(agent=v, strategy=move.new_strategy)
            _assert_improving(witness, s, host)
            return VerificationReport(verdict=Verdict.REFUTED, witness=witness)
    return VerificationReport(
        verdict=Verdict.EQUILIBRIUM,
        certificates=equilibrium_certificates(s, host, kind=EquilibriumKind.GREEDY),
    )


def greedy_dynamics(
    s0: StrategyProfile, host: HostGraph, max_rounds: int = 100
) -> DynamicsResult:
    """Round-robin greedy dynamics until a silent round or ``max_rounds``.

    On convergence the final profile is re-verified by is_greedy_equilibrium
    and the report attached. Non-convergence is reported, not raised.
    """
    s0.validate(host)
    current = s0
    for round_index in range(1, max_rounds + 1):
        moved = False
        for v in host.nodes:
            move = greedy_improving_response(v, current, host)
            if move is not None:
                current = current.with_strategy(v, move.new_strategy)
                moved = True
        if not moved:
            report = is_greedy_equilibrium(current, host)
            if not report.is_equilibrium:
                raise AssertionError("internal error: silent round is not a GE")
            return DynamicsResult(
                profile=current, converged=True, rounds=round_index, report=report
            )
    return DynamicsResult(
        profile=current, converged=False, rounds=max_rounds, report=None
    )


def necessary_terminals(
    e: TimeEdge, buyer: NodeId, s: StrategyProfile, host: HostGraph
) -> frozenset[NodeId]:
    """Terminals the buyer reaches with ``e`` in its strategy but not without.

    Removal acts on the buyer's strategy and the realized graph is re-formed,
    so an edge that another agent also buys is never necessary.
    """
    _require_node(host, buyer)
    s.validate(host)
    if e not in s.strategy(buyer):
        raise NotOwned(f"{e} is not bought by {buyer!r}")
    with_edge = realized_graph(s, host)
    without = realized_graph(s.with_strategy(buyer, s.strategy(buyer) - {e}), host)
    reach_with, _ = propagate_arrivals(
        with_edge.label_groups(), buyer, targets=host.terminal_set
    )
    reach_without, _ = propagate_arrivals(
        without.label_groups(), buyer, targets=host.terminal_set
    )
    return frozenset(
        t for t in host.terminals if t in reach_with and t not in reach_without
    )


@dataclass(frozen=True)
class ForbiddenStructure:
    """Witness of the structure no local equilibrium can contain.

    Two distinct agents u1, u2 adjacent to a common node z each keep two
    distinct edges, one necessary for terminal x and one for terminal y, all
    labelled no earlier than their edge to z. Around an equilibrium either
    agent could reroute through z, so a correct profile never produces this.
    """

    z: NodeId
    u1: NodeId
    u2: NodeId
    x: NodeId
    y: NodeId
    e1x: TimeEdge
    e1y: TimeEdge
    e2x: TimeEdge
    e2y: TimeEdge


def find_forbidden_structure(
    s: StrategyProfile,
    host: HostGraph,
    necessary_fn: Callable[[TimeEdge, NodeId], frozenset[NodeId]] | None = None,
) -> ForbiddenStructure | None:
    """Exhaustive scan for the forbidden local-equilibrium structure.

    Requires a local profile whose realized graph is simple. On correct
    inputs this must return None; ``necessary_fn`` is injectable so tests can
    demonstrate that a broken necessary-terminal computation breaks the
    guarantee (negative control).

    Raises:
        SettingMismatch: profile is not local.
        NotSimple: realized graph carries two labels on some pair.
    """
    if s.setting is not Setting.LOCAL:
        raise SettingMismatch("forbidden-structure scan applies to local profiles")
    graph = realized_graph(s, host)
    if not graph.is_simple:
        raise NotSimple("realized graph must carry one label per pair")
    if necessary_fn is None:
        def necessary_fn(edge: TimeEdge, buyer: NodeId) -> frozenset[NodeId]:
            return necessary_terminals(edge, buyer, s, host)

    necessary_cache: dict[tuple[TimeEdge, NodeId], frozenset[NodeId]] = {}

    def necessary(edge: TimeEdge, buyer: NodeId) -> frozenset[NodeId]:
        key = (edge, buyer)
        if key not in necessary_cache:
            necessary_cache[key] = frozenset(necessary_fn(edge, buyer))
        return necessary_cache[key]

    def kept_edges(u: NodeId, z: NodeId, threshold: int) -> list[TimeEdge]:
        # Edges u buys, other than {z, u}, labelled no earlier than {z, u}.
        pair = (min(z, u), max(z, u))
        return [
            e
            for e in sorted(s.strategy(u))
            if e.pair != pair and e.label >= threshold
        ]

    terminals = host.terminals
    nodes = graph.nodes
    for z in nodes:
        neighbors = [u for u in nodes if u != z and graph.labels(z, u)]
        for i, u1 in enumerate(neighbors):
            for u2 in neighbors[i + 1 :]:
                lab1 = graph.labels(z, u1)[0]
                lab2 = graph.labels(z, u2)[0]
                kept1 = kept_edges(u1, z, lab1)
                kept2 = kept_edges(u2, z, lab2)
                if len(kept1) < 2 or len(kept2) < 2:
                    continue
                for xi, x in enumerate(terminals):
                    for y in terminals[xi + 1 :]:
                        for e1x in kept1:
                            if x not in necessary(e1x, u1):
                                continue
                            for e1y in kept1:
                                if e1y == e1x or y not in necessary(e1y, u1):
                                    continue
                                for e2x in kept2:
                                    if e2x in (e1x, e1y) or x not in necessary(e2x, u2):
                                        continue
                                    for e2y in kept2:
                                        if e2y in (e1x, e1y, e2x):
                                            continue
                                        if y not in necessary(e2y, u2):
                                            continue
                                        return ForbiddenStructure(
                                            z=z, u1=u1, u2=u2, x=x, y=y,
                                            e1x=e1x, e1y=e1y, e2x=e2x, e2y=e2y,
                                        )
    return None


def equilibrium_certificates(
    s: StrategyProfile, host: HostGraph, kind: EquilibriumKind = EquilibriumKind.NASH
) -> dict[str, Certificate]:
    """Size bounds the realized graph of a verified equilibrium must satisfy.

    - lifetime_density: at most lifetime * (n - 1) edges, any setting and
      kind (a label class of size n would close a droppable monochromatic
      cycle).
    - local_ge_density (local profiles): strictly fewer than sqrt(6k)*n + n
      edges; denser local graphs are never greedy-stable.
    - global_ne_size (global profiles, NE only): at most k * (n - 1) edges.
      Global greedy equilibria can be denser, so the bound is not attached
      for kind "ge".
    """
    graph = realized_graph(s, host)
    m = graph.time_edge_count
    n = host.node_count
    k = host.terminal_count
    lifetime = host.lifetime
    certificates: dict[str, Certificate] = {
        "lifetime_density": Certificate(
            value=m, bound=float(lifetime * (n - 1)), holds=m <= lifetime * (n - 1)
        )
    }
    if s.setting is Setting.LOCAL:
        bound = math.sqrt(6 * k) * n + n
        certificates["local_ge_density"] = Certificate(value=m, bound=bound, holds=m < bound)
    if s.setting is Setting.GLOBAL and kind is EquilibriumKind.NASH:
        certificates["global_ne_size"] = Certificate(
            value=m, bound=float(k * (n - 1)), holds=m <= k * (n - 1)
        )
    return certificates
