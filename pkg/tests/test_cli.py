import json
import subprocess
import sys

import pytest

from x1chambers.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_report_text(capsys):
    code, out, _ = run(capsys, "report", "11")
    assert code == 0
    assert "genus: 1" in out and "cusps: 10" in out


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "4", "--component", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["level"], doc["genus"], doc["cusps"]["total"]) == (2, 0, 2)
    assert [o["order"] for o in doc["orbifold"]] == [2]


@pytest.mark.parametrize(
    "argv, fragment",
    [(["report", "1"], "a must be >= 2"), (["report", "6", "--component", "4"], "d | a"), (["graph", "6", "--component", "6"], "d < a")],
)
def test_invalid_component(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2 and fragment in err


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "5", "--format", "dot"],
        ["report", "5", "--format", "csv"],
        ["graph", "5", "--format", "csv"],
        ["table", "4", "6", "--format", "dot"],
        ["table", "6", "4"],
        ["table", "1", "4"],
        ["verify", "60", "2"],
        ["report", "five"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "5", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for ln in lines if "[kind=" in ln) == 8
    assert sum(1 for ln in lines if " -- " in ln) == 8
    assert run(capsys, "graph", "5", "--format", "dot")[1] == out
    assert 'kind="cylinder"' in out and "fillcolor=white" in out and "shape=point" in out


def test_graph_dot_doubled_edge(capsys):
    _, out, _ = run(capsys, "graph", "4", "--format", "dot")
    edges = [ln.split(" [")[0].strip() for ln in out.splitlines() if " -- " in ln]
    assert edges.count('"unb:1,1,2" -- "tri:1,1,2"') == 2


def test_triangle_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "6", "--which", "triangles", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["vertices"]) == 3 and len(doc["edges"]) == 4
    pairs = [tuple(sorted((e["source"], e["target"]))) for e in doc["edges"]]
    assert pairs.count(("tri:1,2,3", "tri:1,3,2")) == 2


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "5", "13", "--format", "json")
    rows = {r["a"]: r for r in json.loads(out)}
    assert code == 0
    for p in (5, 7, 11, 13):
        assert rows[p]["genus"] * 24 == (p - 5) * (p - 7)
        assert rows[p]["cusps"] == p - 1
    assert rows[12]["genus"] == 0
    assert {k: rows[5][k] for k in ("C", "F", "cusps", "genus")} == {"C": 8, "F": 8, "cusps": 4, "genus": 0}


def test_table_csv(capsys):
    _, out, _ = run(capsys, "table", "4", "6", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "a,level,S,F,CT,DT,CC,C,cusps,genus"
    assert lines[1] == "4,4,5,4,1,2,1,4,3,0"
    assert len(lines) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "12", "--format", "json"],
        ["graph", "7", "--format", "json"],
        ["table", "2", "12", "--format", "json"],
        ["verify", "2", "6", "--format", "json"],
    ],
)
def test_json_round_trip_and_determinism(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


@pytest.mark.parametrize("lo, hi", [("5", "5"), ("2", "60")])
def test_verify_passes(capsys, lo, hi):
    assert run(capsys, "verify", lo, hi)[0] == 0


def test_verify_failure_exit(capsys, monkeypatch):
    from x1chambers import cli, topology

    def broken(a_min, a_max):
        s = topology.ValidationSummary(a_min, a_max)
        s.add("genus", a_min, 1, 0)
        return s

    monkeypatch.setattr(cli, "cross_validate", broken)
    code, out, _ = run(capsys, "verify", "5", "5")
    assert code == 1
    assert json.loads(out)["failures"][0]["name"] == "genus"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "x1chambers", "report", "5", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["genus"] == 0
