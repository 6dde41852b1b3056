import io
import json
import subprocess
import sys

import pytest

from covpack.cli import bound_class, main
from covpack.families import make_knm
from covpack.graph import Graph, complete_graph, cycle_graph, parse_graph6, render_edge_list, to_graph6
from covpack.solvers import cover_number, packing_number

C4_PENDANT = Graph(5, list(cycle_graph(4).edge_list) + [(0, 4)])


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_solve_k5(cli):
    code, out, _ = cli(["solve", "--json"], to_graph6(complete_graph(5)) + "\n")
    rec = json.loads(out)
    assert code == 0
    assert (rec["beta"], rec["nu2"], rec["class"]) == (4, 5, "upper-extremal")
    assert len(rec["cover"]) == 4 and len(rec["packing"]) == 5


def test_solve_lower_extremal_edgelist(cli):
    code, out, _ = cli(["solve", "--format", "edgelist", "--json"], render_edge_list(C4_PENDANT))
    rec = json.loads(out)
    assert code == 0 and rec["class"] == "lower-extremal" and (rec["beta"], rec["nu2"]) == (2, 4)


def test_solve_text_and_multiple(cli):
    code, out, _ = cli(["solve"], "Bw\nC~\n")
    assert code == 0 and out.count("beta=") == 2 and "class=" in out


def test_solve_json_round_trip(cli):
    g = make_knm(4, 2)
    _, out, _ = cli(["solve", "--json"], to_graph6(g))
    rec = json.loads(out)
    h = parse_graph6(rec["graph6"])
    assert h == g and rec["beta"] == cover_number(h) and rec["nu2"] == packing_number(h)


@pytest.mark.parametrize("bad, fmt", [("C!!", "graph6"), ("Bw\n:Bw", "graph6"), ("n 3\n0 5\n", "edgelist")])
def test_solve_malformed(cli, bad, fmt):
    code, _, err = cli(["solve", "--format", fmt], bad)
    assert code == 2 and "error" in err


def test_bound_class_labels():
    assert bound_class(2, 3) == "both-extremal"
    assert bound_class(3, 6) == "lower-extremal"
    assert bound_class(4, 5) == "upper-extremal"
    assert bound_class(4, 6) == "interior"
    assert bound_class(1, 1) == "above-upper"


def test_characterize(cli):
    code, out, _ = cli(["characterize", "--theorems", "upper-char", "--json"], "F@Q@w\n")
    assert code == 1 and json.loads(out)["outcome"] == "fails"
    code, out, _ = cli(["characterize"], "D~{\n")
    assert code == 0 and out.count("\n") == 5


def test_generate(cli):
    code, out, _ = cli(["generate", "knm", "4", "1"])
    assert code == 0 and parse_graph6(out.strip()) == make_knm(4, 1)
    code, out, _ = cli(["generate", "hat-counterexample", "5", "--format", "edgelist"])
    assert code == 0 and out.startswith("n 6")
    code, out, _ = cli(["generate", "family", "cycle", "4", "T=0,2", "I=1", "extra=0-4"])
    g = parse_graph6(out.strip())
    assert g.n == 5 and g.has_edge(0, 4)
    code, out, _ = cli(["generate", "random-family", "path", "5", "--hat", "--random", "4", "--seed", "3"])
    gs = [parse_graph6(x) for x in out.split()]
    assert len(gs) == 4 and all(packing_number(g) == 5 for g in gs)
    code, out2, _ = cli(["generate", "random-family", "path", "5", "--hat", "--random", "4", "--seed", "3"])
    assert out2 == out


@pytest.mark.parametrize("argv", [["generate", "knm", "4"], ["generate", "hat-counterexample", "4"],
                                  ["generate", "family", "cycle", "4", "T=0,1"]])
def test_generate_errors(cli, argv):
    assert cli(argv)[0] == 2


def test_enumerate_check_exit_codes(cli, tmp_path):
    code, out, err = cli(["enumerate-check", "--max-n", "5"])
    assert code == 0 and "wall time" in err and "bounds" in out
    out_path = tmp_path / "r.jsonl"
    code, out, _ = cli(["enumerate-check", "--max-n", "6", "--output", str(out_path)])
    assert code == 1 and out.count("FAIL lower-char") == 3
    assert json.loads(out_path.read_text().splitlines()[-1])["summary"]["failures"] == 3
    assert cli(["enumerate-check", "--theorems", "nonsense"])[0] == 2
    assert cli(["enumerate-check", "--max-n", "12"])[0] == 2


def test_enumerate_check_input_stream(cli, tmp_path):
    p = tmp_path / "in.g6"
    p.write_text("EKYW\nD~{\n")
    code, out, _ = cli(["enumerate-check", "--input", str(p), "--theorems", "lower-char", "--json"])
    summary = json.loads(out)["summary"]
    assert code == 1 and summary["graphs"] == 2 and summary["failures"] == 1


def test_figures(cli):
    code, out, _ = cli(["figures", "--max-n", "5", "--json"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and {r["class"] for r in recs} == {"nu2=3,beta=2", "nu2=4,beta=3,maximal"}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "covpack", "solve", "--json"], input="Bw\n",
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["beta"] == 2
