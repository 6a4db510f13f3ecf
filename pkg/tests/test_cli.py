import json
import subprocess
import sys
from pathlib import Path

import pytest

from gcgraph.cli import main
from gcgraph.export import parse_dot_counts

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition_golden(capsys):
    code, out, _ = run(capsys, "partition", "--group", "S3", "--alpha", "inner:(12)", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["omega"] == ["e", "(123)", "(132)"]
    assert data["big_omega"] == ["(12)"]
    assert data["mho"] == ["(13)", "(23)"]
    assert data == json.loads((GOLDEN / "partition_S3_inner12.json").read_text())


def test_build_json_golden(capsys):
    code, out, _ = run(capsys, "build", "--group", "S4", "--alpha", "inner:(12)", "--subset", "(12),(34)", "--format", "json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "build_S4_inner12.json").read_text())


def test_validate_violation(capsys):
    code, _, err = run(capsys, "validate", "--group", "S3", "--alpha", "inner:(12)", "--subset", "(123)")
    assert code == 1 and "violates (b)" in err
    code, _, err = run(capsys, "validate", "--group", "S3", "--alpha", "inner:(12)", "--subset", "(13)")
    assert code == 1 and "violates (c)" in err
    code, out, _ = run(capsys, "validate", "--group", "S3", "--alpha", "inner:(12)", "--subset", "(13),(23)")
    assert code == 0 and out.strip() == "valid"


def test_non_involutory_alpha(capsys):
    code, _, err = run(capsys, "partition", "--group", "S4", "--alpha", "inner:(123)")
    assert code == 1 and "(a)" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["partition", "--group", "Q9"],
        ["partition", "--group", "S3", "--alpha", "inner:(1"],
        ["partition", "--group", "S3", "--alpha", "outer"],
        ["validate", "--group", "S3", "--subset", "(14)"],
        ["enumerate", "--group", "S3", "--max-size", "-1"],
        ["partition", "--group", "S9"],
        ["verify-paper", "--targets", "S3,X1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


@pytest.mark.parametrize("subset, k", [("(12)", 1), ("(12),(34)", 2), ("(13),(23),(12)", 3)])
def test_dot_and_edges_round_trip(capsys, subset, k):
    code, dot, _ = run(capsys, "build", "--group", "S4", "--alpha", "inner:(12)", "--subset", subset, "--format", "dot")
    assert code == 0
    assert dot.startswith('graph "GC(S4,{')
    assert parse_dot_counts(dot) == (24, 24 * k // 2)
    code, edges, _ = run(capsys, "build", "--group", "S4", "--alpha", "inner:(12)", "--subset", subset, "--format", "edges")
    pairs = [tuple(map(int, line.split())) for line in edges.splitlines()]
    assert len(pairs) == 24 * k // 2
    assert pairs == sorted(pairs) and all(0 <= u < v < 24 for u, v in pairs)


def test_dot_name_uses_cycles(capsys):
    _, dot, _ = run(capsys, "build", "--group", "S3", "--alpha", "inner:(12)", "--subset", "(12)", "--format", "dot")
    assert dot.splitlines()[0] == 'graph "GC(S3,{(12)},inner:(12))" {'
    assert '[label="(123)"]' in dot


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "S4", "--alpha", "inner:(12)", "--max-size", "4", "--format", "json")
    assert code == 0 and len(json.loads(out)["subsets"]) == 114


def test_gci_test(capsys):
    code, out, _ = run(
        capsys, "gci-test", "--group", "S4", "--alpha", "inner:(12)", "--subset", "(12)",
        "--alpha2", "inner:(12)(34)", "--subset2", "(12)(34)", "--format", "json",
    )
    data = json.loads(out)
    assert code == 0 and data["graph_isomorphic"] is True and data["gci"]["kind"] == "none"


def test_aut_and_classify(capsys):
    code, out, _ = run(capsys, "aut", "--group", "S6", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["aut_order"] == 1440 and data["inner"] == 720 and not data["complete"]
    code, out, _ = run(capsys, "classify", "--group", "S3", "--format", "json")
    data = json.loads(out)
    assert data["restricted_gci"]["status"] == "yes" and data["gci"]["status"] == "no"
    code, out, _ = run(capsys, "classify", "--group", "S5")
    assert out.strip() == "S5: gci=no restricted_gci=no"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "p.json"
    code, out, _ = run(capsys, "partition", "--group", "S3", "--alpha", "inner:(12)", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["big_omega"] == ["(12)"]


def test_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("GENCAYLEY_CAP", "50")
    code, _, err = run(capsys, "partition", "--group", "S5")
    assert code == 2 and "exceed" in err.lower()


def test_verify_paper_parallel_matches_serial(capsys):
    code1, serial, _ = run(capsys, "verify-paper", "--targets", "S3,S5", "--format", "json")
    code2, parallel, _ = run(capsys, "verify-paper", "--targets", "S3,S5", "--format", "json", "--parallel")
    assert code1 == code2 == 0
    assert serial == parallel


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "gcgraph.cli", "partition", "--group", "S3"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("omega: e")
