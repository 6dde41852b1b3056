import json

import pytest

from covpack.families import counterexample_hatted, make_knm
from covpack.graph import Graph, canonical_form, complete_graph, cycle_graph, parse_graph6, star_graph
from covpack.harness import enumerate_connected
from covpack.solvers import cover_number, packing_number
from covpack.theorems import (
    THEOREMS,
    UNPROVED,
    Outcome,
    TheoremVerdict,
    UnknownTheoremError,
    characterize_upper,
    figure_classes,
    get_theorem,
    lower_structure_check,
    verify_bounds,
    verify_lower_characterization,
    verify_parity_lemmas,
    verify_small_nu2,
)
from covpack.solvers import min_component_max_2packing

TWO_TRIANGLES = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
UPPER_DEFECT = parse_graph6("F@Q@w")
C4_PENDANT = Graph(5, list(cycle_graph(4).edge_list) + [(0, 4)])


def test_bounds_examples():
    assert verify_bounds(complete_graph(5)).outcome is Outcome.HOLDS
    assert verify_bounds(cycle_graph(5)).outcome is Outcome.NOT_APPLICABLE
    v = verify_bounds(Graph(4, [(0, 1), (2, 3)]))
    assert v.outcome is Outcome.NOT_APPLICABLE and v.detail["reason"] == "disconnected"


@pytest.mark.parametrize("n", range(3, 8))
def test_small_nu2_star(n):
    v = verify_small_nu2(star_graph(n))
    assert v.outcome is Outcome.HOLDS and (v.beta, v.nu2) == (1, 2)


def test_upper_examples():
    assert characterize_upper(complete_graph(6)).detail["complete"]
    v = characterize_upper(make_knm(5, 1))
    assert v.outcome is Outcome.HOLDS and v.detail["sandwich"]
    assert v.detail["witness"]["pendant"] == 5
    assert characterize_upper(make_knm(3, 1)).outcome is Outcome.NOT_APPLICABLE


def test_upper_known_counterexample():
    v = characterize_upper(UPPER_DEFECT)
    assert (v.beta, v.nu2) == (4, 5)
    assert v.outcome is Outcome.FAILS
    assert v.detail["extremal"] and not v.detail["complete"] and not v.detail["sandwich"]


def test_lower_examples():
    v = verify_lower_characterization(C4_PENDANT)
    assert v.outcome is Outcome.HOLDS and v.detail["at_bound"] and v.detail["structure_exists"]
    v = verify_lower_characterization(complete_graph(6))
    assert not v.detail["at_bound"] and not v.detail["sum_tight"] and v.holds


def test_lower_known_counterexample():
    v = verify_lower_characterization(TWO_TRIANGLES)
    assert (v.beta, v.nu2) == (4, 6)
    assert v.outcome is Outcome.FAILS
    assert v.detail["beta_sum"] == 4 and v.detail["sum_tight"] and not v.detail["at_bound"]
    assert v.detail["conditions_match_sum"]


def test_lower_odd_reading_flag():
    g = counterexample_hatted(5).add_edges([(0, 2)])
    v = verify_lower_characterization(g)
    assert v.detail["odd_reading_separates"] == (v.nu2 % 2 == 1 and v.detail["at_bound"])


def test_structure_check_universal_gap():
    # C4 plus pendant on 0: only covers containing 0 work
    r = min_component_max_2packing(C4_PENDANT)
    chk = lower_structure_check(C4_PENDANT, r, use_hatted=False)
    assert chk.confined and chk.exists
    assert chk.assignments == 2 and not chk.universal
    assert 0 in chk.witness[0]


def test_parity_examples():
    v = verify_parity_lemmas(C4_PENDANT)
    assert v.outcome is Outcome.HOLDS and v.detail["case"] == "even"
    assert verify_parity_lemmas(complete_graph(5)).detail["case"] == "vacuous"
    assert verify_parity_lemmas(Graph(2)).outcome is Outcome.NOT_APPLICABLE


@pytest.mark.parametrize("tid", sorted(THEOREMS))
@pytest.mark.parametrize("g", [complete_graph(5), TWO_TRIANGLES, UPPER_DEFECT, C4_PENDANT])
def test_verdict_json_round_trip(tid, g):
    v = get_theorem(tid)(g)
    rec = json.loads(v.to_json())
    assert TheoremVerdict.from_record(rec) == v
    assert rec["graph_id"] == canonical_form(g).decode()
    assert rec["outcome"] in {o.value for o in Outcome}


def test_unknown_theorem():
    with pytest.raises(UnknownTheoremError, match="nope"):
        get_theorem("nope")
    assert UNPROVED <= set(THEOREMS)


def test_verdicts_are_isomorphism_invariant():
    perm = [4, 2, 0, 5, 1, 3, 6]
    a = get_theorem("upper-char")(UPPER_DEFECT)
    b = get_theorem("upper-char")(UPPER_DEFECT.relabel(perm))
    assert (a.graph_id, a.outcome, a.beta, a.nu2) == (b.graph_id, b.outcome, b.beta, b.nu2)


@pytest.fixture(scope="module")
def figures():
    return figure_classes(6)


def test_figure_classes(figures):
    three = figures["nu2=3,beta=2"]
    four = figures["nu2=4,beta=3,maximal"]
    keys3 = [canonical_form(g) for g in three]
    assert len(set(keys3)) == len(keys3)
    assert canonical_form(make_knm(3, 1)) in keys3
    for g in three:
        assert (packing_number(g), cover_number(g)) == (3, 2)
    assert canonical_form(make_knm(4, 1)) in {canonical_form(g) for g in four}
    for g in four:
        assert (packing_number(g), cover_number(g)) == (4, 3)


def test_figure_classes_over_enumeration(figures):
    expected = [g for n in range(1, 7) for g in enumerate_connected(n)
                if g.m > packing_number(g) and (packing_number(g), cover_number(g)) == (3, 2)]
    assert figures["nu2=3,beta=2"] == expected
