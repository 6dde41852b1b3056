import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from covpack.graph import Graph, GraphError, GraphParseError, canonical_form, complete_graph, to_graph6
from covpack.harness import (
    build_universe,
    enumerate_connected,
    read_graph6_stream,
    run_suite,
    standing_hypotheses,
)
from covpack.theorems import THEOREMS, Outcome, UnknownTheoremError

from conftest import to_nx


def _atlas_connected(n):
    out = []
    for h in graph_atlas_g():
        if h.number_of_nodes() == n and n > 0 and nx.is_connected(h):
            out.append(canonical_form(Graph(n, list(h.edges()))))
    return out


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_atlas(n):
    ours = [canonical_form(g) for g in enumerate_connected(n)]
    atlas = _atlas_connected(n)
    assert len(ours) == len(set(ours)) == len(atlas)
    assert set(ours) == set(atlas)


def test_enumeration_n8_count():
    assert len(enumerate_connected(8)) == 11117


def test_enumerated_graphs_connected_and_sorted():
    gs = enumerate_connected(6)
    assert all(nx.is_connected(to_nx(g)) for g in gs)
    keys = [to_graph6(g) for g in gs]
    assert keys == sorted(keys)


@pytest.mark.parametrize("n", [0, 10, -1])
def test_enumeration_range(n):
    with pytest.raises(GraphError):
        enumerate_connected(n)


def test_universe_filter():
    assert all(standing_hypotheses(g) for g in build_universe(6))
    assert len(build_universe(5, raw=True)) == 1 + 1 + 2 + 6 + 21
    assert len(build_universe(4)) == 4  # star, paw, diamond, K4
    assert len(build_universe(4, min_n=4)) == 4


def test_read_stream_line_numbers():
    gs = read_graph6_stream(["C~", "", "Bw"])
    assert [g.n for g in gs] == [4, 3]
    with pytest.raises(GraphParseError, match="line 3"):
        read_graph6_stream(["C~", "Bw", "C!!"])


def test_run_suite_empty_and_examples():
    rep = run_suite([], ["bounds"])
    assert rep.graphs == 0 and rep.counts["bounds"]["holds"] == 0
    rep = run_suite([complete_graph(5)], ["bounds"])
    assert rep.counts["bounds"]["holds"] == 1 and not rep.failures
    with pytest.raises(UnknownTheoremError):
        run_suite([complete_graph(5)], ["bogus"])
    with pytest.raises(ValueError):
        run_suite([complete_graph(5)], [])
    with pytest.raises(ValueError):
        run_suite([complete_graph(5)], ["bounds"], workers=0)


def test_report_counts_and_render():
    gs = build_universe(6)
    rep = run_suite(gs, list(THEOREMS))
    assert len(rep.records) == len(gs) * len(THEOREMS)
    for t in THEOREMS:
        assert sum(rep.counts[t].values()) == len(gs)
    lines = rep.render().splitlines()
    assert len(lines) == len(rep.records) + 1
    assert '"summary"' in lines[-1]
    # known small lower-characterization counterexamples, nothing else
    assert {v.theorem_id for v in rep.proved_failures} == {"lower-char"}
    assert len(rep.proved_failures) == 3
    assert rep.summary()["falsified"] == 0
    assert "universe" in rep.render_table()


def test_determinism_across_workers():
    gs = build_universe(6)
    base = run_suite(gs, list(THEOREMS), workers=1).render()
    assert run_suite(gs, list(THEOREMS), workers=3).render() == base
    assert run_suite(list(gs), list(THEOREMS), workers=2).render() == base


def test_outcomes_enum_counts_include_all():
    rep = run_suite(build_universe(4), ["parity"])
    assert set(rep.counts["parity"]) == {o.value for o in Outcome}
