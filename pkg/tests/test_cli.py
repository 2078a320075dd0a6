import io as stdio
import json
import subprocess
import sys

import pytest

from closednbhd import io
from closednbhd.cli import main
from closednbhd.complexes import SimplicialComplex
from closednbhd.graphs import complete_graph, digraph_x2
from closednbhd.verify import run_suite


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", stdio.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_pipe_complete_graph_homology_is_zero(cli):
    _, g, _ = cli(["gen", "complete", "4"])
    _, k, _ = cli(["complex", "closed-nbhd", "-k", "1"], g)
    code, table, _ = cli(["homology"], k)
    assert code == 0
    rows = [line.split() for line in table.splitlines()[1:]]
    assert all(r[1] == "0" and r[2] == "-" for r in rows)


def test_pipe_cycle_homology_json(cli):
    _, g, _ = cli(["gen", "cycle", "5"])
    _, k, _ = cli(["complex", "closed-nbhd"], g)
    code, out, _ = cli(["homology", "--json"], k)
    assert code == 0
    assert json.loads(out)["dims"]["1"] == {"betti": 1, "torsion": []}


def test_field_homology(cli):
    k = json.dumps({"ground": [0, 1], "facets": [[0], [1]]})
    code, out, _ = cli(["homology", "--field", "3", "--json"], k)
    assert code == 0 and json.loads(out)["betti"]["0"] == 1


def test_dual_round_trip(cli):
    k = json.dumps({"ground": [0, 1, 2], "facets": [[0, 1], [2]]})
    _, d, _ = cli(["dual"], k)
    _, back, _ = cli(["dual"], d)
    assert json.loads(back) == json.loads(k)


def test_dual_of_full_simplex_is_void(cli):
    _, d, _ = cli(["dual"], json.dumps({"ground": [0, 1], "facets": [[0, 1]]}))
    assert json.loads(d) == {"ground": [0, 1], "void": True}


def test_digraph_complexes(cli):
    _, g, _ = cli(["gen", "x1"])
    _, r, _ = cli(["complex", "right-closed-nbhd"], g)
    assert json.loads(r)["facets"] == [[0, 1], [1, 2]]


def test_complement_flag(cli):
    g = io.dumps(io.graph_to_json(complete_graph(3)))
    _, k, _ = cli(["complex", "closed-nbhd", "--complement"], g)
    assert json.loads(k)["facets"] == [[0], [1], [2]]


def test_pi1_json(cli):
    _, g, _ = cli(["gen", "x2"])
    _, k, _ = cli(["complex", "left-closed-nbhd", "-k", "2"], g)
    code, out, _ = cli(["pi1", "--json"], k)
    data = json.loads(out)
    assert code == 0 and data["certificate"] == "trivial"
    assert data["abelianization"] == {"free_rank": 0, "torsion": []}


def test_kpath_equiv_exit_codes(cli, tmp_path):
    _, g, _ = cli(["gen", "complete", "3"])
    path = tmp_path / "k3.json"
    path.write_text(g)
    code, out, _ = cli(["kpath-equiv", "--graph", str(path), "-k", "2", "--loop", "0,1,2,0", "--loop2", "0"])
    assert code == 0 and json.loads(out)["status"] == "equivalent"
    _, g, _ = cli(["gen", "cycle", "5"])
    path.write_text(g)
    code, out, _ = cli(["kpath-equiv", "--graph", str(path), "-k", "2", "--loop", "0,1,2,3,4,0",
                        "--loop2", "0", "--max-states", "500"])
    assert code == 2 and json.loads(out)["witness"] == []


def test_metric_and_cech(cli):
    _, m, _ = cli(["metric", "circle", "-n", "6"])
    code, k, _ = cli(["cech", "--closed", "-r", "1/6"], m)
    assert code == 0 and len(json.loads(k)["facets"]) == 6


@pytest.mark.parametrize("argv,stdin", [
    (["homology"], "{not json"),
    (["homology"], json.dumps({"ground": [0], "facets": [[0]], "extra": 1})),
    (["complex", "closed-nbhd"], json.dumps({"type": "graph", "n": 2, "edges": [[0, 5]]})),
    (["complex", "clique"], io.dumps(io.graph_to_json(digraph_x2()))),
    (["cech", "-r", "abc"], json.dumps({"n": 1, "dist": [["0"]]})),
    (["gen", "cycle", "x"], ""),
    (["homology", "--bogus"], ""),
    (["verify", "nope"], ""),
    ([], ""),
])
def test_usage_and_input_errors_exit_3(cli, argv, stdin):
    code, _, err = cli(argv, stdin)
    assert code == 3
    assert "error" in err


def test_verify_json_is_reproducible(cli):
    _, a, _ = cli(["verify", "dowker", "--seed", "7", "--cases", "20", "--json", "--no-timing"])
    code, b, _ = cli(["verify", "dowker", "--seed", "7", "--cases", "20", "--json", "--no-timing"])
    assert code == 0 and a == b
    assert json.loads(a)["suite"] == "dowker"


def test_verify_exit_code_follows_report():
    assert run_suite("wedge-k2kn", 0).exit_code() == 0


def test_console_script_help():
    out = subprocess.run(["closednbhd", "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for sub in ("gen", "complex", "dual", "homology", "pi1", "kpath-equiv", "metric", "cech", "verify"):
        assert sub in out.stdout


def test_io_round_trips():
    k = SimplicialComplex.from_simplices(range(3), [(0, 1), (2,)])
    assert io.complex_from_json(io.loads(io.dumps(io.complex_to_json(k)))) == k
    g = digraph_x2()
    assert io.graph_from_json(io.graph_to_json(g)) == g
    with pytest.raises(io.FormatError):
        io.metric_from_json({"n": 2, "dist": [["0", "1"], ["2", "0"]]})
    with pytest.raises(io.FormatError):
        io.presentation_from_json({"generators": 1, "relators": [[2]]})


def test_verify_dowker_seed_7(cli):
    code, out, _ = cli(["verify", "dowker", "--seed", "7", "--cases", "100"])
    assert code == 0 and "pass" in out
