"""Command line behavior: families, verdict exit codes, tables."""

import json
import shutil
import subprocess

import pytest
from click.testing import CliRunner

from tempo_ncg import (
    InstanceFile,
    StrategyProfile,
    loads_instance,
    save_instance,
)
from tempo_ncg.cli import main
from tempo_ncg.fixtures import FIXTURE_BUILDERS, get_fixture


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args))


def gen_file(runner, tmp_path, filename, *args):
    path = tmp_path / filename
    result = invoke(runner, "gen", *args, "--out", str(path))
    assert result.exit_code == 0, result.output + result.stderr
    return path


# -- gen ----------------------------------------------------------------------


def test_gen_every_fixture_family(runner):
    for family in sorted(FIXTURE_BUILDERS):
        result = invoke(runner, "gen", family)
        assert result.exit_code == 0
        instance = loads_instance(result.output)
        assert instance.name == family
        assert instance.profile is not None


def test_gen_dense_cycle(runner):
    result = invoke(runner, "gen", "dense-cycle", "--x", "2")
    assert result.exit_code == 0
    instance = loads_instance(result.output)
    assert instance.name == "dense-cycle-x2"
    assert instance.host.node_count == 8


def test_gen_hypercube_with_rename(runner):
    result = invoke(runner, "gen", "hypercube", "--d", "2", "--name", "square")
    assert result.exit_code == 0
    instance = loads_instance(result.output)
    assert instance.name == "square"
    assert instance.host.node_count == 4


def test_gen_two_terminal(runner):
    result = invoke(
        runner, "gen", "two-terminal", "--n", "5", "--seed", "3",
        "--setting", "local",
    )
    assert result.exit_code == 0
    instance = loads_instance(result.output)
    assert instance.host.terminal_count == 2
    assert instance.profile.setting.value == "local"


def test_gen_scale_and_extends_from_file(runner, tmp_path):
    base = gen_file(runner, tmp_path, "cube.json", "hypercube", "--d", "1")
    scaled = invoke(runner, "gen", "scale", "--instance", str(base), "--c", "3")
    assert scaled.exit_code == 0
    assert loads_instance(scaled.output).host.node_count == 6

    ext_t = invoke(runner, "gen", "extend-terminal", "--instance", str(base))
    assert ext_t.exit_code == 0
    inst_t = loads_instance(ext_t.output)
    assert inst_t.host.node_count == 3
    assert inst_t.host.terminal_count == 3

    ext_n = invoke(runner, "gen", "extend-nonterminal", "--instance", str(base))
    assert ext_n.exit_code == 0
    inst_n = loads_instance(ext_n.output)
    assert inst_n.host.node_count == 3
    assert inst_n.host.terminal_count == 2


def test_gen_product_of_two_files(runner, tmp_path):
    left = gen_file(runner, tmp_path, "l.json", "hypercube", "--d", "1")
    right = gen_file(runner, tmp_path, "r.json", "hypercube", "--d", "1")
    result = invoke(
        runner, "gen", "product", "--left", str(left), "--right", str(right)
    )
    assert result.exit_code == 0
    instance = loads_instance(result.output)
    assert instance.host.node_count == 4
    assert instance.name == "hypercube-d1-x-hypercube-d1"


def test_gen_missing_required_parameter_exits_2(runner):
    result = invoke(runner, "gen", "dense-cycle")
    assert result.exit_code == 2
    assert "dense-cycle needs --x" in result.stderr


def test_gen_rejected_parameter_exits_2(runner):
    result = invoke(runner, "gen", "dense-cycle", "--x", "3")
    assert result.exit_code == 2


def test_gen_unknown_family_is_a_usage_error(runner):
    result = invoke(runner, "gen", "moebius")
    assert result.exit_code == 2


# -- verify -------------------------------------------------------------------


def test_verify_equilibrium_exits_0(runner, tmp_path):
    path = gen_file(runner, tmp_path, "left.json", "fig5-left")
    result = invoke(runner, "verify", str(path))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["verdict"] == "equilibrium"
    assert "witness" not in data
    assert "lifetime_density" in data["certificates"]


def test_verify_refuted_prints_witness_and_exits_1(runner, tmp_path):
    path = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(runner, "verify", str(path))
    assert result.exit_code == 1
    data = json.loads(result.output)
    assert data["verdict"] == "refuted"
    assert data["witness"]["agent"] == "v3"
    assert data["witness"]["strategy"] == [["v1", "v3", 1]]


def test_verify_empty_profile_is_refuted(runner, tmp_path):
    inst = get_fixture("fig5-left")
    hollow = InstanceFile(
        name="hollow",
        host=inst.host,
        profile=StrategyProfile(setting=inst.profile.setting, strategies={}),
    )
    path = tmp_path / "empty.json"
    save_instance(hollow, path)
    result = invoke(runner, "verify", str(path))
    assert result.exit_code == 1
    assert json.loads(result.output)["verdict"] == "refuted"


def test_verify_budget_can_be_inconclusive(runner, tmp_path):
    path = gen_file(runner, tmp_path, "left.json", "fig5-left")
    result = invoke(runner, "verify", str(path), "--budget", "1")
    assert result.exit_code == 2
    assert json.loads(result.output)["verdict"] == "inconclusive"


def test_verify_greedy_kind(runner, tmp_path):
    path = gen_file(runner, tmp_path, "dense.json", "dense-cycle", "--x", "2")
    result = invoke(runner, "verify", str(path), "--kind", "ge")
    assert result.exit_code == 0


def test_verify_csv_format(runner, tmp_path):
    path = gen_file(runner, tmp_path, "left.json", "fig5-left")
    result = invoke(runner, "verify", str(path), "--format", "csv")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "verdict,witness_agent,witness_strategy,states_examined"
    assert lines[1].startswith("equilibrium,,")


def test_verify_missing_file_exits_2(runner):
    result = invoke(runner, "verify", "no-such-file.json")
    assert result.exit_code == 2


# -- sweep --------------------------------------------------------------------


def test_sweep_matches_expected_count(runner, tmp_path):
    path = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(
        runner, "sweep", str(path), "--mode", "global", "--expected", "0"
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["total_assignments"] == 1024
    assert data["survivors"] == 1
    assert data["equilibria_found"] == 0
    assert data["equilibria"] == []


def test_sweep_mismatched_expectation_exits_1(runner, tmp_path):
    path = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(
        runner, "sweep", str(path), "--mode", "global", "--expected", "1"
    )
    assert result.exit_code == 1


def test_sweep_over_budget_exits_2(runner, tmp_path):
    path = gen_file(runner, tmp_path, "right.json", "fig5-right")
    result = invoke(
        runner, "sweep", str(path), "--mode", "global", "--budget", "10"
    )
    assert result.exit_code == 2
    assert "exceed" in result.stderr


# -- dynamics -----------------------------------------------------------------


def test_dynamics_converges_on_equilibrium_start(runner, tmp_path):
    path = gen_file(runner, tmp_path, "left.json", "fig5-left")
    result = invoke(runner, "dynamics", str(path))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["converged"] is True
    assert data["rounds"] == 1
    assert data["report"]["verdict"] == "equilibrium"


def test_dynamics_budget_exhaustion_exits_2(runner, tmp_path):
    path = gen_file(runner, tmp_path, "left.json", "fig5-left")
    result = invoke(runner, "dynamics", str(path), "--max-rounds", "0")
    assert result.exit_code == 2
    data = json.loads(result.output)
    assert data["converged"] is False
    assert data["report"] is None


# -- optimum ------------------------------------------------------------------


def test_optimum_exact_size(runner, tmp_path):
    path = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(runner, "optimum", str(path))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["exact"] is True
    assert data["size"] == 4
    assert len(data["edges"]) == 4


def test_optimum_refusal_reports_bounds_and_exits_2(runner, tmp_path):
    path = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(runner, "optimum", str(path), "--max-edges", "3")
    assert result.exit_code == 2
    data = json.loads(result.output)
    assert data["exact"] is False
    assert data["lower_bound"] == 3
    assert data["lower_bound"] <= data["upper_bound"]


# -- poa ----------------------------------------------------------------------


def test_poa_table_skips_refuted_instances(runner, tmp_path):
    dense = gen_file(runner, tmp_path, "dense.json", "dense-cycle", "--x", "2")
    forced = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(runner, "poa", str(dense), str(forced))
    assert result.exit_code == 0
    assert "fig4 failed ne verification" in result.stderr
    lines = result.stdout.splitlines()
    assert lines[0].startswith("name,n,k,lifetime,kind")
    assert len(lines) == 2
    assert lines[1].startswith("dense-cycle-x2,8,8,4,ne,global,12,7,True,7,")


def test_poa_json_format_and_out_file(runner, tmp_path):
    dense = gen_file(runner, tmp_path, "dense.json", "dense-cycle", "--x", "2")
    out = tmp_path / "table.json"
    result = invoke(
        runner, "poa", str(dense), "--format", "json", "--out", str(out)
    )
    assert result.exit_code == 0
    rows = json.loads(out.read_text())
    assert rows[0]["equilibrium_edges"] == 12
    assert rows[0]["optimum_edges"] == 7


def test_poa_with_no_verified_instance_exits_2(runner, tmp_path):
    forced = gen_file(runner, tmp_path, "forced.json", "fig4")
    result = invoke(runner, "poa", str(forced))
    assert result.exit_code == 2
    assert "no instance produced a record" in result.stderr


# -- installed entry point ----------------------------------------------------


def test_console_script_is_installed():
    exe = shutil.which("tempo-ncg")
    assert exe is not None
    proc = subprocess.run(
        [exe, "--help"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    for sub in ("gen", "verify", "sweep", "dynamics", "optimum", "poa"):
        assert sub in proc.stdout
