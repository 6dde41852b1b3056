"""Enumeration of small connected graphs and batch evaluation of the checks."""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph, GraphError, GraphParseError, canonical_form, max_degree, parse_graph6, to_graph6
from .theorems import UNPROVED, Outcome, TheoremVerdict, get_theorem

MAX_ENUM_N = 9


@lru_cache(maxsize=None)
def _connected_keys(n: int) -> tuple[bytes, ...]:
    if n == 1:
        return (canonical_form(Graph(1)),)
    found: set[bytes] = set()
    for key in _connected_keys(n - 1):
        parent = parse_graph6(key.decode())
        base = list(parent.edges)
        # every connected graph has a vertex whose removal leaves it connected
        for mask in range(1, 1 << (n - 1)):
            edges = base + [(w, n - 1) for w in range(n - 1) if mask >> w & 1]
            found.add(canonical_form(Graph(n, edges)))
    return tuple(sorted(found))


def enumerate_connected(n: int) -> list[Graph]:
    """One canonically labeled representative per isomorphism class, sorted by graph6."""
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    return [parse_graph6(k.decode()) for k in _connected_keys(n)]


def standing_hypotheses(g: Graph) -> bool:
    """Connected (by construction) with |E| > nu_2, i.e. max degree >= 3."""
    return max_degree(g) >= 3


def build_universe(max_n: int, min_n: int = 1, raw: bool = False) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        for g in enumerate_connected(n):
            if raw or standing_hypotheses(g):
                out.append(g)
    return out


def read_graph6_stream(lines: Iterable[str]) -> list[Graph]:
    out = []
    for i, line in enumerate(lines, start=1):
        s = line.strip()
        if not s:
            continue
        try:
            out.append(parse_graph6(s))
        except GraphParseError as exc:
            raise type(exc)(str(exc), i) from None
    return out


@dataclass
class SuiteReport:
    universe: str
    theorems: list[str]
    counts: dict[str, dict[str, int]]
    records: list[TheoremVerdict]
    wall_time: float = 0.0
    graphs: int = 0

    @property
    def failures(self) -> list[TheoremVerdict]:
        return [v for v in self.records if v.outcome is Outcome.FAILS]

    @property
    def falsified(self) -> list[TheoremVerdict]:
        return [v for v in self.records if v.outcome is Outcome.FALSIFIED]

    @property
    def proved_failures(self) -> list[TheoremVerdict]:
        return [v for v in self.failures if v.theorem_id not in UNPROVED]

    def summary(self) -> dict:
        return {
            "universe": self.universe,
            "graphs": self.graphs,
            "theorems": self.theorems,
            "counts": self.counts,
            "failures": len(self.failures),
            "falsified": len(self.falsified),
            "budget_exhausted": sum(c[Outcome.BUDGET_EXHAUSTED.value] for c in self.counts.values()),
        }

    def render(self, records: bool = True) -> str:
        """Line-delimited JSON: one record per graph per theorem, then a summary line.

        Timing is left out so the bytes only depend on the inputs.
        """
        lines = [v.to_json() for v in self.records] if records else []
        lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def render_table(self) -> str:
        head = f"{'theorem':<12}" + "".join(f"{o.value:>18}" for o in Outcome)
        rows = [f"universe: {self.universe} ({self.graphs} graphs)", head]
        for tid in self.theorems:
            c = self.counts[tid]
            rows.append(f"{tid:<12}" + "".join(f"{c[o.value]:>18}" for o in Outcome))
        return "\n".join(rows) + "\n"


def _evaluate(args: tuple[str, tuple[str, ...]]) -> list[TheoremVerdict]:
    g6, tids = args
    g = parse_graph6(g6)
    return [get_theorem(t)(g) for t in tids]


def run_suite(universe: Sequence[Graph], theorems: Sequence[str], workers: int = 1,
              label: str = "custom") -> SuiteReport:
    """Evaluate every theorem on every graph; record order follows the input order."""
    if not theorems:
        raise ValueError("no theorems requested")
    for t in theorems:
        get_theorem(t)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    tids = tuple(theorems)
    jobs = [(to_graph6(g), tids) for g in universe]
    start = time.perf_counter()
    if workers == 1 or len(jobs) < 2:
        results = map(_evaluate, jobs)
        verdicts = [v for batch in results for v in batch]
    else:
        chunk = max(1, len(jobs) // (workers * 8))
        with multiprocessing.Pool(workers) as pool:
            verdicts = [v for batch in pool.imap(_evaluate, jobs, chunksize=chunk) for v in batch]
    counts = {t: {o.value: 0 for o in Outcome} for t in tids}
    for v in verdicts:
        counts[v.theorem_id][v.outcome.value] += 1
    return SuiteReport(label, list(tids), counts, verdicts,
                       time.perf_counter() - start, len(jobs))


def default_universe_label(max_n: int, raw: bool) -> str:
    return f"connected n<={max_n}" + ("" if raw else ", max degree >= 3")
