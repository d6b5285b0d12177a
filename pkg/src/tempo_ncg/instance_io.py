"""JSON instance files: a host graph, an optional profile, and metadata.

The on-disk format is UTF-8 JSON with canonical key order, so emitted files
are bit-stable golden files. Edges are keyed "u|v" with u < v and carry
sorted label arrays; ``default_label`` is shorthand for every unlisted pair,
which keeps nearly-uniform hosts hand-editable. Parsing rejects incomplete
hosts (a pair with no labels and no default), unknown schema versions, and
node ids containing the reserved "|" separator. parse and emit are mutually
inverse on canonical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import HostGraph, NodeId, TemporalGraph, TimeEdge
from .errors import IncompleteHost
from .game import Setting, StrategyProfile

SCHEMA_VERSION = 1
PAIR_SEPARATOR = "|"


@dataclass(frozen=True)
class InstanceFile:
    """A named host, an optional strategy profile, and provenance metadata."""

    name: str
    host: HostGraph
    profile: StrategyProfile | None = None
    source: str | None = None
    default_label: int | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("instance name must be nonempty")
        for node in self.host.nodes:
            if PAIR_SEPARATOR in node:
                raise ValueError(
                    f"node id {node!r} contains the reserved separator "
                    f"{PAIR_SEPARATOR!r}"
                )
        if self.profile is not None:
            self.profile.validate(self.host)


def _edge_key(u: NodeId, v: NodeId) -> str:
    a, b = sorted((u, v))
    return f"{a}{PAIR_SEPARATOR}{b}"


def instance_to_dict(instance: InstanceFile) -> dict:
    """Canonical dict form of an instance (stable key order throughout)."""
    graph = instance.host.graph
    edges: dict[str, list[int]] = {}
    for u, v in graph.pairs():
        labels = list(graph.labels(u, v))
        if instance.default_label is not None and labels == [instance.default_label]:
            continue
        edges[_edge_key(u, v)] = labels
    data: dict = {"v": SCHEMA_VERSION, "name": instance.name}
    if instance.source is not None:
        data["source"] = instance.source
    host: dict = {
        "nodes": list(instance.host.nodes),
        "terminals": list(instance.host.terminals),
        "edges": edges,
    }
    if instance.default_label is not None:
        host["default_label"] = instance.default_label
    data["host"] = host
    if instance.profile is not None:
        data["profile"] = {
            "setting": instance.profile.setting.value,
            "strategies": {
                agent: [[e.u, e.v, e.label] for e in sorted(bought)]
                for agent, bought in instance.profile.strategies.items()
            },
        }
    return data


def instance_from_dict(data: dict) -> InstanceFile:
    """Parse and validate the canonical dict form.

    Raises:
        ValueError: unknown schema version, malformed keys, or bad ids.
        IncompleteHost: a node pair has no labels and no default applies.
    """
    if not isinstance(data, dict) or data.get("v") != SCHEMA_VERSION:
        raise ValueError(f"expected schema version {SCHEMA_VERSION}")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("instance needs a nonempty string name")
    source = data.get("source")
    host_data = data.get("host")
    if not isinstance(host_data, dict):
        raise ValueError("instance needs a host object")
    nodes = host_data.get("nodes")
    terminals = host_data.get("terminals")
    if not isinstance(nodes, list) or not isinstance(terminals, list):
        raise ValueError("host needs node and terminal lists")
    default_label = host_data.get("default_label")
    if default_label is not None and (
        not isinstance(default_label, int) or default_label < 1
    ):
        raise ValueError(f"default_label must be a positive int, got {default_label!r}")
    node_set = set(nodes)
    edges: list[TimeEdge] = []
    listed: set[tuple[NodeId, NodeId]] = set()
    raw_edges = host_data.get("edges", {})
    if not isinstance(raw_edges, dict):
        raise ValueError("host edges must map 'u|v' keys to label lists")
    for key, labels in raw_edges.items():
        parts = key.split(PAIR_SEPARATOR)
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValueError(f"edge key {key!r} is not of the form 'u|v'")
        u, v = parts
        if u >= v:
            raise ValueError(f"edge key {key!r} must order its nodes u < v")
        if u not in node_set or v not in node_set:
            raise ValueError(f"edge key {key!r} uses a node outside the node list")
        if not isinstance(labels, list) or not labels:
            raise ValueError(f"edge {key!r} needs a nonempty label list")
        listed.add((u, v))
        edges.extend(TimeEdge(u, v, label) for label in labels)
    sorted_nodes = sorted(node_set)
    for i, u in enumerate(sorted_nodes):
        for v in sorted_nodes[i + 1 :]:
            if (u, v) in listed:
                continue
            if default_label is None:
                raise IncompleteHost(
                    f"pair ({u!r}, {v!r}) has no labels and no default_label is set"
                )
            edges.append(TimeEdge(u, v, default_label))
    host = HostGraph(graph=TemporalGraph(nodes, edges), terminals=tuple(terminals))
    profile = None
    profile_data = data.get("profile")
    if profile_data is not None:
        if not isinstance(profile_data, dict):
            raise ValueError("profile must be an object")
        setting = Setting(profile_data.get("setting"))
        raw_strategies = profile_data.get("strategies", {})
        if not isinstance(raw_strategies, dict):
            raise ValueError("profile strategies must map agents to edge lists")
        strategies: dict[NodeId, frozenset[TimeEdge]] = {}
        for agent, triples in raw_strategies.items():
            bought = set()
            for triple in triples:
                if not isinstance(triple, list) or len(triple) != 3:
                    raise ValueError(f"strategy edge {triple!r} is not [u, v, label]")
                u, v, label = triple
                bought.add(TimeEdge(u, v, label))
            strategies[agent] = frozenset(bought)
        profile = StrategyProfile(setting=setting, strategies=strategies)
    return InstanceFile(
        name=name,
        host=host,
        profile=profile,
        source=source,
        default_label=default_label,
    )


def dumps_instance(instance: InstanceFile) -> str:
    return json.dumps(instance_to_dict(instance), indent=2, ensure_ascii=False) + "\n"


def loads_instance(text: str) -> InstanceFile:
    return instance_from_dict(json.loads(text))


def save_instance(instance: InstanceFile, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(instance), encoding="utf-8")


def load_instance(path: str | Path) -> InstanceFile:
    return loads_instance(Path(path).read_text(encoding="utf-8"))
