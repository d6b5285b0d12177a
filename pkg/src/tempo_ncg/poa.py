"""Price-of-anarchy records: equilibrium size against the social optimum.

At any verified equilibrium the social cost is (0, realized edge count), so
the interesting ratio is realized edges over the minimum terminal spanner
size. Optima are exact whenever the search succeeds; otherwise the record
carries a constructive upper bound flagged as inexact together with the
universal n - 1 lower bound, never a silent guess.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable
from dataclasses import dataclass

from .core import HostGraph
from .errors import SearchTooLarge
from .game import (
    EquilibriumKind,
    Setting,
    StrategyProfile,
    VerificationReport,
    is_greedy_equilibrium,
    is_nash_equilibrium,
    realized_graph,
)
from .spanner_opt import SpannerSearchConfig, min_terminal_spanner, prune_to_minimal

CSV_COLUMNS = (
    "name",
    "n",
    "k",
    "lifetime",
    "kind",
    "setting",
    "equilibrium_edges",
    "optimum_edges",
    "optimum_exact",
    "optimum_lower_bound",
    "ratio",
)


@dataclass(frozen=True)
class PoARecord:
    """One experiment row; ``optimum_exact`` distinguishes proven optima from
    upper bounds (the lower bound column then brackets the truth)."""

    name: str
    nodes: int
    terminals: int
    lifetime: int
    kind: EquilibriumKind
    setting: Setting
    equilibrium_edges: int
    optimum_edges: int
    optimum_exact: bool
    optimum_lower_bound: int
    ratio: float

    def as_row(self) -> dict[str, object]:
        return {
            "name": self.name,
            "n": self.nodes,
            "k": self.terminals,
            "lifetime": self.lifetime,
            "kind": self.kind.value,
            "setting": self.setting.value,
            "equilibrium_edges": self.equilibrium_edges,
            "optimum_edges": self.optimum_edges,
            "optimum_exact": self.optimum_exact,
            "optimum_lower_bound": self.optimum_lower_bound,
            "ratio": self.ratio,
        }


def compute_optimum(
    host: HostGraph,
    config: SpannerSearchConfig | None = None,
    prune_edge_limit: int = 300,
) -> tuple[int, bool, int]:
    """(optimum or best upper bound, exact flag, lower bound).

    Falls back to pruning the full host to an inclusion-minimal spanner when
    the exact search refuses; above ``prune_edge_limit`` host edges even that
    is skipped and the host's own edge count serves as the (weak) bound.
    """
    lower = max(host.node_count - 1, 0)
    try:
        exact = min_terminal_spanner(host, config).time_edge_count
        return exact, True, exact
    except SearchTooLarge:
        pass
    if host.time_edge_count <= prune_edge_limit:
        upper = prune_to_minimal(host.graph, host.terminals).time_edge_count
    else:
        upper = host.time_edge_count
    return upper, False, lower


def build_poa_record(
    name: str,
    host: HostGraph,
    profile: StrategyProfile,
    kind: EquilibriumKind = EquilibriumKind.NASH,
    config: SpannerSearchConfig | None = None,
) -> tuple[PoARecord | None, VerificationReport]:
    """Verify the profile, then measure it against the optimum.

    Returns ``(None, report)`` when verification does not confirm the claimed
    equilibrium kind; callers skip the record and surface the report.
    """
    if kind is EquilibriumKind.NASH:
        report = is_nash_equilibrium(profile, host)
    else:
        report = is_greedy_equilibrium(profile, host)
    if not report.is_equilibrium:
        return None, report
    equilibrium_edges = realized_graph(profile, host).time_edge_count
    optimum, exact, lower = compute_optimum(host, config)
    record = PoARecord(
        name=name,
        nodes=host.node_count,
        terminals=host.terminal_count,
        lifetime=host.lifetime,
        kind=kind,
        setting=profile.setting,
        equilibrium_edges=equilibrium_edges,
        optimum_edges=optimum,
        optimum_exact=exact,
        optimum_lower_bound=lower,
        ratio=equilibrium_edges / optimum,
    )
    return record, report


def records_to_csv(records: Iterable[PoARecord]) -> str:
    """Fixed-column CSV, rows sorted by instance name."""
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in sorted(records, key=lambda r: r.name):
        writer.writerow(record.as_row())
    return out.getvalue()


def records_to_json(records: Iterable[PoARecord]) -> str:
    rows = [r.as_row() for r in sorted(records, key=lambda r: r.name)]
    return json.dumps(rows, indent=2) + "\n"
