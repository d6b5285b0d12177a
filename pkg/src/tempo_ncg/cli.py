"""Command line front end.

Subcommands: ``gen`` (instance families), ``verify`` (equilibrium check),
``sweep`` (ownership enumeration), ``dynamics`` (greedy best-response),
``optimum`` (minimum terminal spanner), ``poa`` (ratio table). Exit codes
follow one contract everywhere: 0 verified/holds, 1 refuted (witness on
stdout), 2 inconclusive or usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .constructions import (
    dense_cycle_instance,
    extend_with_nonterminal,
    extend_with_terminal,
    graph_product,
    hypercube_equilibrium,
    random_host,
    scale_with_nonterminals,
    two_terminal_ne,
)
from .errors import SearchTooLarge, TemporalGameError
from .fixtures import FIXTURE_BUILDERS, get_fixture
from .game import (
    EquilibriumKind,
    Setting,
    StrategyProfile,
    Verdict,
    VerificationReport,
    direct_terminal_profile,
    greedy_dynamics,
    is_greedy_equilibrium,
    is_nash_equilibrium,
    realized_graph,
)
from .instance_io import InstanceFile, dumps_instance, load_instance
from .poa import build_poa_record, compute_optimum, records_to_csv, records_to_json
from .spanner_opt import SpannerSearchConfig, min_terminal_spanner
from .sweeps import sweep_ownership

GENERATED_FAMILIES = (
    "dense-cycle",
    "hypercube",
    "two-terminal",
    "scale",
    "product",
    "extend-terminal",
    "extend-nonterminal",
)
FAMILIES = GENERATED_FAMILIES + tuple(FIXTURE_BUILDERS)


def _fail_usage(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load_or_die(path: str) -> InstanceFile:
    try:
        return load_instance(path)
    except (OSError, ValueError, TemporalGameError) as exc:
        _fail_usage(f"cannot load {path}: {exc}")
        raise AssertionError  # unreachable


def _require_profile(instance: InstanceFile) -> StrategyProfile:
    if instance.profile is None:
        _fail_usage(f"instance {instance.name!r} carries no profile")
    assert instance.profile is not None
    return instance.profile


def _strategy_triples(edges) -> list[list[object]]:
    return [[e.u, e.v, e.label] for e in sorted(edges)]


def _report_dict(report: VerificationReport) -> dict:
    data: dict = {
        "verdict": report.verdict.value,
        "states_examined": report.states_examined,
    }
    if report.witness is not None:
        data["witness"] = {
            "agent": report.witness.agent,
            "strategy": _strategy_triples(report.witness.strategy),
        }
    if report.certificates:
        data["certificates"] = {
            name: {"value": c.value, "bound": c.bound, "holds": c.holds}
            for name, c in sorted(report.certificates.items())
        }
    return data


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        Path(out).write_text(text, encoding="utf-8")


@click.group()
def main() -> None:
    """Temporal network creation game toolkit."""


@main.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--x", type=int, help="dense-cycle size parameter (even, >= 2)")
@click.option("--d", type=int, help="hypercube dimension (>= 1)")
@click.option("--c", type=int, help="scale factor (>= 1)")
@click.option("--n", type=int, help="two-terminal node count (>= 2)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-label", type=int, help="random host label cap")
@click.option(
    "--extra-label-prob", type=float, default=0.0, show_default=True,
    help="chance of extra labels per pair in random hosts",
)
@click.option(
    "--setting", type=click.Choice([s.value for s in Setting]),
    default=Setting.GLOBAL.value, show_default=True,
    help="setting for the two-terminal construction",
)
@click.option("--instance", "instance_path", type=click.Path(exists=True),
              help="input instance for scale / extend families")
@click.option("--left", type=click.Path(exists=True), help="product left factor")
@click.option("--right", type=click.Path(exists=True), help="product right factor")
@click.option("--name", help="override the generated instance name")
@click.option("--out", type=click.Path(), help="write here instead of stdout")
def gen(family, x, d, c, n, seed, max_label, extra_label_prob, setting,
        instance_path, left, right, name, out) -> None:
    """Generate an instance (host + profile) from a named family."""
    try:
        if family in FIXTURE_BUILDERS:
            instance = get_fixture(family)
        elif family == "dense-cycle":
            if x is None:
                _fail_usage("dense-cycle needs --x")
            built = dense_cycle_instance(x)
            instance = InstanceFile(
                name=f"dense-cycle-x{x}", host=built.host, profile=built.profile,
                source="generated: dense cycle family",
            )
        elif family == "hypercube":
            if d is None:
                _fail_usage("hypercube needs --d")
            host, profile = hypercube_equilibrium(d)
            instance = InstanceFile(
                name=f"hypercube-d{d}", host=host, profile=profile,
                source="generated: iterated product of single-edge instances",
            )
        elif family == "two-terminal":
            if n is None:
                _fail_usage("two-terminal needs --n")
            host = random_host(n, 2, seed, max_label=max_label,
                               extra_label_prob=extra_label_prob)
            profile = two_terminal_ne(host, Setting(setting))
            instance = InstanceFile(
                name=f"two-terminal-n{n}-s{seed}", host=host, profile=profile,
                source="generated: equilibrium on a seeded random host",
            )
        elif family == "scale":
            if instance_path is None or c is None:
                _fail_usage("scale needs --instance and --c")
            base = _load_or_die(instance_path)
            host, profile = scale_with_nonterminals(
                base.host, _require_profile(base), c
            )
            instance = InstanceFile(
                name=f"{base.name}-scale-c{c}", host=host, profile=profile,
                source=f"generated: {base.name} with {c - 1} satellites per node",
            )
        elif family == "product":
            if left is None or right is None:
                _fail_usage("product needs --left and --right")
            a, b = _load_or_die(left), _load_or_die(right)
            host, profile = graph_product(
                a.host, _require_profile(a), b.host, _require_profile(b)
            )
            instance = InstanceFile(
                name=f"{a.name}-x-{b.name}", host=host, profile=profile,
                source=f"generated: product of {a.name} and {b.name}",
            )
        elif family == "extend-terminal":
            if instance_path is None:
                _fail_usage("extend-terminal needs --instance")
            base = _load_or_die(instance_path)
            host, profile = extend_with_terminal(base.host, _require_profile(base))
            instance = InstanceFile(
                name=f"{base.name}-ext-t", host=host, profile=profile,
                source=f"generated: {base.name} plus one terminal",
            )
        else:
            if instance_path is None:
                _fail_usage("extend-nonterminal needs --instance")
            base = _load_or_die(instance_path)
            host, profile = extend_with_nonterminal(base.host, _require_profile(base))
            instance = InstanceFile(
                name=f"{base.name}-ext-n", host=host, profile=profile,
                source=f"generated: {base.name} plus one non-terminal",
            )
    except (TemporalGameError, ValueError) as exc:
        _fail_usage(str(exc))
        raise AssertionError  # unreachable
    if name:
        instance = InstanceFile(
            name=name, host=instance.host, profile=instance.profile,
            source=instance.source, default_label=instance.default_label,
        )
    _emit(dumps_instance(instance), out)


_EXIT_BY_VERDICT = {
    Verdict.EQUILIBRIUM: 0,
    Verdict.REFUTED: 1,
    Verdict.INCONCLUSIVE: 2,
}


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--kind", type=click.Choice([k.value for k in EquilibriumKind]),
              default=EquilibriumKind.NASH.value, show_default=True)
@click.option("--budget", type=int, help="deviation-search state budget (ne only)")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
def verify(instance, kind, budget, fmt) -> None:
    """Verify the instance's profile; exit 0/1/2 = holds/refuted/inconclusive."""
    inst = _load_or_die(instance)
    profile = _require_profile(inst)
    if EquilibriumKind(kind) is EquilibriumKind.NASH:
        report = is_nash_equilibrium(profile, inst.host, budget=budget)
    else:
        report = is_greedy_equilibrium(profile, inst.host)
    data = _report_dict(report)
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        witness = data.get("witness", {})
        click.echo("verdict,witness_agent,witness_strategy,states_examined")
        click.echo(
            f"{data['verdict']},{witness.get('agent', '')},"
            f"\"{json.dumps(witness.get('strategy', []))}\","
            f"{data['states_examined']}"
        )
    sys.exit(_EXIT_BY_VERDICT[report.verdict])


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--mode", type=click.Choice([s.value for s in Setting]), required=True)
@click.option("--expected", type=int, help="expected equilibrium count")
@click.option("--budget", type=int, help="cap on surviving assignments")
@click.option("--workers", type=int, default=1, show_default=True)
def sweep(instance, mode, expected, budget, workers) -> None:
    """Enumerate ownerships of the profile's realized graph and verify each."""
    inst = _load_or_die(instance)
    profile = _require_profile(inst)
    target = realized_graph(profile, inst.host)
    try:
        result = sweep_ownership(
            inst.host, target, Setting(mode), budget=budget, workers=workers
        )
    except SearchTooLarge as exc:
        _fail_usage(str(exc))
        raise AssertionError  # unreachable
    click.echo(json.dumps({
        "total_assignments": result.total_assignments,
        "survivors": result.survivors,
        "equilibria_found": result.equilibrium_count,
        "equilibria": [
            {agent: _strategy_triples(bought) for agent, bought in p.strategies.items()}
            for p in result.equilibria
        ],
    }, indent=2))
    if expected is not None and result.equilibrium_count != expected:
        sys.exit(1)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--max-rounds", type=int, default=100, show_default=True)
@click.option(
    "--setting", type=click.Choice([s.value for s in Setting]),
    default=Setting.GLOBAL.value, show_default=True,
    help="setting for the default start when the instance has no profile",
)
def dynamics(instance, max_rounds, setting) -> None:
    """Run round-robin greedy dynamics from the instance profile.

    Without a profile, starts from everyone buying direct terminal edges.
    """
    inst = _load_or_die(instance)
    start = inst.profile or direct_terminal_profile(inst.host, Setting(setting))
    result = greedy_dynamics(start, inst.host, max_rounds=max_rounds)
    click.echo(json.dumps({
        "converged": result.converged,
        "rounds": result.rounds,
        "strategies": {
            agent: _strategy_triples(bought)
            for agent, bought in result.profile.strategies.items()
        },
        "report": _report_dict(result.report) if result.report else None,
    }, indent=2))
    if not result.converged:
        sys.exit(2)


@main.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--max-edges", type=int, default=20, show_default=True)
@click.option("--max-subsets", type=int, default=1_000_000, show_default=True)
def optimum(instance, max_edges, max_subsets) -> None:
    """Exact minimum terminal spanner, or bracketed bounds (exit 2)."""
    inst = _load_or_die(instance)
    config = SpannerSearchConfig(max_candidate_edges=max_edges,
                                 max_subsets=max_subsets)
    try:
        spanner = min_terminal_spanner(inst.host, config)
    except SearchTooLarge:
        upper, exact, lower = compute_optimum(inst.host, config)
        click.echo(json.dumps({
            "exact": exact, "lower_bound": lower, "upper_bound": upper,
        }, indent=2))
        sys.exit(2)
    click.echo(json.dumps({
        "exact": True,
        "size": spanner.time_edge_count,
        "edges": _strategy_triples(spanner.time_edges()),
    }, indent=2))


@main.command()
@click.argument("instances", type=click.Path(exists=True), nargs=-1, required=True)
@click.option("--kind", type=click.Choice([k.value for k in EquilibriumKind]),
              default=EquilibriumKind.NASH.value, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", type=click.Path(), help="write here instead of stdout")
def poa(instances, kind, fmt, out) -> None:
    """Equilibrium-size versus optimum table for verified instances."""
    records = []
    for path in instances:
        inst = _load_or_die(path)
        profile = _require_profile(inst)
        record, report = build_poa_record(
            inst.name, inst.host, profile, EquilibriumKind(kind)
        )
        if record is None:
            click.echo(
                f"warning: {inst.name} failed {kind} verification "
                f"({report.verdict.value}); skipped", err=True,
            )
            continue
        records.append(record)
    if not records:
        _fail_usage("no instance produced a record")
    text = records_to_csv(records) if fmt == "csv" else records_to_json(records)
    _emit(text, out)


if __name__ == "__main__":
    main()
