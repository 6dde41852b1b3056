"""Extensional checks of the covering / 2-packing bounds and characterizations.

Every check returns a :class:`TheoremVerdict` with one of five outcomes.
``NOT_APPLICABLE`` means the claim's hypotheses do not hold for the graph;
``FALSIFIED`` is reserved for claims stated without proof, so that a
counterexample to one of those is reported apart from failures of proved
statements.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

from .families import upper_extremal_sandwich
from .graph import Graph, canonical_form, is_complete, is_connected, max_degree, to_graph6
from .solvers import (
    SolverLimitError,
    cover_number,
    enumerate_max_2packings,
    min_component_max_2packing,
    min_vertex_cover,
    packing_number,
)
from .structure import decompose, linear_min_covers, parity_profile

STRUCTURE_BUDGET = 20000


class Outcome(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"
    BUDGET_EXHAUSTED = "budget_exhausted"
    FALSIFIED = "falsified"


class UnknownTheoremError(KeyError):
    pass


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    graph_id: str
    graph6: str
    outcome: Outcome
    beta: int
    nu2: int
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    def to_record(self) -> dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "graph6": self.graph6,
            "graph_id": self.graph_id,
            "outcome": self.outcome.value,
            "beta": self.beta,
            "nu2": self.nu2,
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "TheoremVerdict":
        return cls(rec["theorem_id"], rec["graph_id"], rec["graph6"], Outcome(rec["outcome"]),
                   rec["beta"], rec["nu2"], rec.get("detail", {}))


def _verdict(tid: str, g: Graph, outcome: Outcome, **detail) -> TheoremVerdict:
    return TheoremVerdict(tid, canonical_form(g).decode(), to_graph6(g), outcome,
                          cover_number(g), packing_number(g), detail)


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def _standard_hypotheses(g: Graph) -> str | None:
    """Reason the connected, |E| > nu_2 hypotheses fail, or None."""
    if not is_connected(g):
        return "disconnected"
    if g.m <= packing_number(g):
        return "|E| <= nu2"
    return None


def _packing_payload(g: Graph, r) -> dict[str, Any]:
    d = decompose(g, r)
    return {
        "packing": [list(e) for e in sorted(r.edges)],
        "components": [
            {"shape": str(c.shape), "vertices": list(c.vertex_ids)} for c in d.components
        ],
        "outside": sorted(d.outside_vertices),
    }


# --- individual claims --------------------------------------------------------------


def verify_bounds(g: Graph) -> TheoremVerdict:
    """ceil(nu_2/2) <= beta <= nu_2 - 1 for connected graphs with |E| > nu_2."""
    tid = "bounds"
    why = _standard_hypotheses(g)
    if why:
        return _verdict(tid, g, Outcome.NOT_APPLICABLE, reason=why)
    beta, nu2 = cover_number(g), packing_number(g)
    ok = _ceil_half(nu2) <= beta <= nu2 - 1
    if ok:
        return _verdict(tid, g, Outcome.HOLDS)
    return _verdict(tid, g, Outcome.FAILS, cover=min_vertex_cover(g).sorted(),
                    **_packing_payload(g, min_component_max_2packing(g)))


def _is_star(g: Graph) -> bool:
    return g.m == g.n - 1 and max_degree(g) == g.n - 1


def verify_small_nu2(g: Graph) -> TheoremVerdict:
    """nu_2 = 2 iff beta = 1 (and then G is a star); nu_2 = 3 implies beta = 2."""
    tid = "small-nu2"
    why = _standard_hypotheses(g)
    if why:
        return _verdict(tid, g, Outcome.NOT_APPLICABLE, reason=why)
    beta, nu2 = cover_number(g), packing_number(g)
    iff = (nu2 == 2) == (beta == 1)
    implies = nu2 != 3 or beta == 2
    star = nu2 != 2 or _is_star(g)
    if iff and implies and star:
        return _verdict(tid, g, Outcome.HOLDS)
    return _verdict(tid, g, Outcome.FAILS, iff=iff, implies=implies, star=star,
                    cover=min_vertex_cover(g).sorted())


def characterize_upper(g: Graph) -> TheoremVerdict:
    """beta = nu_2 - 1 iff G is K_{nu_2} or sandwiched K_{nu_2-1}^2 <= G <= K_{nu_2}^1."""
    tid = "upper-char"
    why = _standard_hypotheses(g)
    nu2 = packing_number(g)
    if why is None and nu2 < 5:
        why = "nu2 < 5"
    if why:
        return _verdict(tid, g, Outcome.NOT_APPLICABLE, reason=why)
    beta = cover_number(g)
    extremal = beta == nu2 - 1
    complete = is_complete(g) and g.n == nu2
    witness = upper_extremal_sandwich(g)
    sandwich = witness is not None and g.n == nu2 + 1
    detail: dict[str, Any] = {"extremal": extremal, "complete": complete, "sandwich": sandwich}
    if witness is not None:
        detail["witness"] = {
            "clique": sorted(witness.clique_vertices),
            "attach": witness.attach_vertex,
            "pendant": witness.pendant_vertex,
        }
    if extremal == (complete or sandwich):
        return _verdict(tid, g, Outcome.HOLDS, **detail)
    detail["cover"] = min_vertex_cover(g).sorted()
    return _verdict(tid, g, Outcome.FAILS, **detail)


def verify_parity_lemmas(g: Graph) -> TheoremVerdict:
    """Component parities of every maximum 2-packing at the lower bound.

    Even nu_2 with beta = nu_2/2: all components even. Odd nu_2 with
    beta = (nu_2+1)/2: exactly one odd component. The odd case is stated
    without proof, so a counterexample to it is reported as FALSIFIED.
    """
    tid = "parity"
    if not is_connected(g):
        return _verdict(tid, g, Outcome.NOT_APPLICABLE, reason="disconnected")
    beta, nu2 = cover_number(g), packing_number(g)
    if beta != _ceil_half(nu2) or nu2 == 0:
        return _verdict(tid, g, Outcome.HOLDS, case="vacuous")
    even_case = nu2 % 2 == 0
    checked = 0
    try:
        for r in enumerate_max_2packings(g):
            checked += 1
            prof = parity_profile(decompose(g, r))
            bad = prof.odd_components != (0 if even_case else 1)
            if bad:
                outcome = Outcome.FAILS if even_case else Outcome.FALSIFIED
                return _verdict(tid, g, outcome, case="even" if even_case else "odd",
                                odd_components=prof.odd_components, **_packing_payload(g, r))
    except SolverLimitError as exc:
        return _verdict(tid, g, Outcome.BUDGET_EXHAUSTED, reason=str(exc))
    return _verdict(tid, g, Outcome.HOLDS, case="even" if even_case else "odd",
                    packings_checked=checked)


@dataclass(frozen=True)
class StructureCheck:
    """Result of the per-component family/attachment conditions."""

    confined: bool
    hatted_ok: bool
    exists: bool
    universal: bool
    assignments: int
    witness: list[list[int]] | None
    exhausted: bool = False


def lower_structure_check(g: Graph, r, use_hatted: bool,
                          budget: int = STRUCTURE_BUDGET) -> StructureCheck:
    """Conditions on a decomposition R_1..R_k with outside set I.

    Every outside vertex must see exactly one component; with
    ``use_hatted`` each G[V(R_i) + I_i] must have nu_2 equal to |R_i|;
    and for a choice of minimum covers T_i of the components every edge of
    G must touch their union. Reports whether some and whether every
    choice of the T_i works.
    """
    d = decompose(g, r)
    owner = {}
    for i, c in enumerate(d.components):
        for v in c.vertex_ids:
            owner[v] = i
    confined = True
    attached: list[list[int]] = [[] for _ in d.components]
    for u in sorted(d.outside_vertices):
        seen = {owner[w] for w in g.neighbors(u) if w in owner}
        if len(seen) != 1 or any(w not in owner for w in g.neighbors(u)):
            confined = False
            break
        attached[seen.pop()].append(u)

    hatted_ok = True
    if confined and use_hatted:
        for c, extra in zip(d.components, attached):
            sub, _ = g.induced(list(c.vertex_ids) + extra)
            if packing_number(sub) != c.edge_count:
                hatted_ok = False
                break

    choices = [linear_min_covers(c) for c in d.components]
    total = 1
    for ch in choices:
        total *= len(ch)
    if not (confined and hatted_ok):
        return StructureCheck(confined, hatted_ok, False, False, 0, None)
    if total > budget:
        return StructureCheck(confined, hatted_ok, False, False, 0, None, exhausted=True)

    exists, universal = False, True
    witness = None
    for combo in product(*choices):
        t = frozenset().union(*combo)
        ok = all(u in t or v in t for u, v in g.edges)
        if ok and witness is None:
            witness = [sorted(x) for x in combo]
        exists |= ok
        universal &= ok
    return StructureCheck(confined, hatted_ok, exists, universal, total, witness)


def verify_lower_characterization(g: Graph, budget: int = STRUCTURE_BUDGET) -> TheoremVerdict:
    """beta = ceil(nu_2/2) iff beta = sum of beta(R_i), plus the structural conditions.

    Uses a maximum 2-packing with the fewest components. Holds when the
    biconditional holds and, at the lower bound, some choice of component
    covers satisfies the family and attachment conditions. The detail
    also records the existential/universal reading gap, whether the
    structural conditions agree with beta = sum beta(R_i), and odd-nu_2
    graphs where reading the bound as nu_2/2 instead of ceil(nu_2/2) matters.
    """
    tid = "lower-char"
    why = _standard_hypotheses(g)
    nu2 = packing_number(g)
    if why is None and nu2 < 4:
        why = "nu2 < 4"
    if why:
        return _verdict(tid, g, Outcome.NOT_APPLICABLE, reason=why)
    beta = cover_number(g)
    try:
        r = min_component_max_2packing(g)
    except SolverLimitError as exc:
        return _verdict(tid, g, Outcome.BUDGET_EXHAUSTED, reason=str(exc))
    d = decompose(g, r)
    beta_sum = sum(c.cover_number for c in d.components)
    at_bound = beta == _ceil_half(nu2)
    sum_tight = beta == beta_sum
    check = lower_structure_check(g, r, use_hatted=nu2 % 2 == 1, budget=budget)
    detail: dict[str, Any] = {
        "beta_sum": beta_sum,
        "at_bound": at_bound,
        "sum_tight": sum_tight,
        "biconditional": at_bound == sum_tight,
        "confined": check.confined,
        "hatted_ok": check.hatted_ok,
        "structure_exists": check.exists,
        "structure_universal": check.universal,
        "readings_differ": check.exists != check.universal,
        "conditions_match_sum": check.exists == sum_tight,
        "odd_reading_separates": nu2 % 2 == 1 and at_bound,
    }
    if check.exhausted:
        return _verdict(tid, g, Outcome.BUDGET_EXHAUSTED, **detail)
    if check.witness is not None:
        detail["cover_choice"] = check.witness
    ok = at_bound == sum_tight and (not at_bound or check.exists)
    if ok:
        return _verdict(tid, g, Outcome.HOLDS, **detail)
    detail.update(_packing_payload(g, r))
    detail["cover"] = min_vertex_cover(g).sorted()
    return _verdict(tid, g, Outcome.FAILS, **detail)


THEOREMS: dict[str, Callable[[Graph], TheoremVerdict]] = {
    "bounds": verify_bounds,
    "small-nu2": verify_small_nu2,
    "upper-char": characterize_upper,
    "parity": verify_parity_lemmas,
    "lower-char": verify_lower_characterization,
}

# claims stated without proof: their counterexamples never make a run fail
UNPROVED = {"parity"}


def get_theorem(tid: str) -> Callable[[Graph], TheoremVerdict]:
    try:
        return THEOREMS[tid]
    except KeyError:
        raise UnknownTheoremError(f"unknown theorem id {tid!r}; known: {sorted(THEOREMS)}") from None


# --- small extremal graphs by enumeration -------------------------------------------


def _one_step_supergraphs(g: Graph, max_n: int):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                yield g.add_edges([(u, v)])
    if g.n < max_n:
        for mask in range(1, 1 << g.n):
            edges = list(g.edges) + [(w, g.n) for w in range(g.n) if mask >> w & 1]
            yield Graph(g.n + 1, edges)


def figure_classes(max_n: int = 7) -> dict[str, list[Graph]]:
    """Connected graphs with (nu_2, beta) = (3, 2), and the maximal ones with (4, 3).

    Maximal means no single added edge or added vertex keeps the class;
    as both invariants only grow under supergraphs this is maximality
    under the subgraph order within n <= max_n.
    """
    from .harness import enumerate_connected

    def in_class(h: Graph, nu2: int, beta: int) -> bool:
        return h.m > packing_number(h) and packing_number(h) == nu2 and cover_number(h) == beta

    three, four = [], []
    for n in range(1, max_n + 1):
        for h in enumerate_connected(n):
            if in_class(h, 3, 2):
                three.append(h)
            elif in_class(h, 4, 3):
                if not any(in_class(s, 4, 3) for s in _one_step_supergraphs(h, max_n)):
                    four.append(h)
    return {"nu2=3,beta=2": three, "nu2=4,beta=3,maximal": four}


def recover_figure_graphs(max_n: int = 7) -> list[Graph]:
    classes = figure_classes(max_n)
    return classes["nu2=3,beta=2"] + classes["nu2=4,beta=3,maximal"]
