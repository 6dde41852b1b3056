"""Extremal families: K_n^m, the upper-bound sandwich, and cycle/path families.

Labeling convention for a family descriptor: a cycle base of length k uses
vertices 0..k-1 with edges i~i+1 (mod k); a path base of length k uses
vertices 0..k with edges i~i+1. Independent extra vertices follow the base.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graph import (
    Edge,
    Graph,
    GraphError,
    ShapeKind,
    bits,
    complete_graph,
    is_connected,
    mask_of,
    norm_edge,
)
from .solvers import cover_number, packing_number


class FamilyError(GraphError):
    """Invalid family parameters or construction."""


def make_knm(n: int, m: int) -> Graph:
    """Complete graph on 0..n-1 with a path n..n+m-1 hung from vertex 0."""
    if n < 1 or m < 0:
        raise FamilyError("make_knm needs n >= 1 and m >= 0")
    if m == 0:
        return complete_graph(n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(n + i, n + i + 1) for i in range(m - 1)]
    edges.append((0, n))
    return Graph(n + m, edges)


# --- sandwich -----------------------------------------------------------------


@dataclass(frozen=True)
class SandwichWitness:
    clique_vertices: frozenset[int]
    attach_vertex: int
    pendant_vertex: int


def upper_extremal_sandwich(g: Graph) -> SandwichWitness | None:
    """Labeling V = X + {u, v} with G[X] complete, v a leaf on u, u touching X.

    Equivalent to K_{n-2}^2 <= G <= K_{n-1}^1.
    """
    if g.n < 3:
        return None
    for v in range(g.n):
        if g.degree(v) != 1:
            continue
        u = next(bits(g.adj[v]))
        x = g.all_mask & ~(1 << u | 1 << v)
        if not g.adj[u] & x:
            continue
        if all((g.adj[w] & x) == x & ~(1 << w) for w in bits(x)):
            return SandwichWitness(frozenset(bits(x)), u, v)
    return None


# --- cycle / path families ---------------------------------------------------------


def _base_size(base: ShapeKind, k: int) -> int:
    return k if base is ShapeKind.CYCLE else k + 1


def _base_edges(base: ShapeKind, k: int) -> list[Edge]:
    if base is ShapeKind.CYCLE:
        return [norm_edge(i, (i + 1) % k) for i in range(k)]
    return [(i, i + 1) for i in range(k)]


def base_min_covers(base: ShapeKind, k: int) -> list[frozenset[int]]:
    """Every minimum cover of the bare cycle/path, in descriptor labels."""
    edges = _base_edges(base, k)
    size = (k + 1) // 2
    out = []
    for combo in combinations(range(_base_size(base, k)), size):
        s = set(combo)
        if all(u in s or v in s for u, v in edges):
            out.append(frozenset(combo))
    return out


@dataclass(frozen=True)
class FamilyDescriptor:
    base: ShapeKind
    k: int
    t_set: frozenset[int]
    t_hat: frozenset[int]
    i_set: frozenset[int]
    hatted: bool = False

    def __post_init__(self):
        if self.base not in (ShapeKind.CYCLE, ShapeKind.PATH):
            raise FamilyError("family base must be a cycle or a path")
        if self.base is ShapeKind.CYCLE and self.k < 3:
            raise FamilyError("cycle base needs k >= 3")
        if self.base is ShapeKind.PATH and self.k < 1:
            raise FamilyError("path base needs k >= 1")
        nb = _base_size(self.base, self.k)
        verts = frozenset(range(nb))
        if self.t_set not in base_min_covers(self.base, self.k):
            raise FamilyError(f"T={sorted(self.t_set)} is not a minimum cover of the base")
        if self.t_hat != verts - self.t_set:
            raise FamilyError("T-hat must be the base vertices outside T")
        if self.i_set & verts:
            raise FamilyError("independent set overlaps the base")
        if self.i_set != frozenset(range(nb, nb + len(self.i_set))):
            raise FamilyError("independent vertices must be numbered right after the base")

    @classmethod
    def make(cls, base: ShapeKind | str, k: int, t_set: Iterable[int], i_count: int = 0,
             hatted: bool = False) -> "FamilyDescriptor":
        base = ShapeKind(base) if isinstance(base, str) else base
        t = frozenset(t_set)
        nb = _base_size(base, k)
        return cls(base, k, t, frozenset(range(nb)) - t,
                   frozenset(range(nb, nb + i_count)), hatted)

    @property
    def n(self) -> int:
        return _base_size(self.base, self.k) + len(self.i_set)

    def base_edges(self) -> list[Edge]:
        return _base_edges(self.base, self.k)

    def allowed_extra_edges(self) -> list[Edge]:
        """Edges of K_T, K_{T,T-hat}, K_{T,I} that are not base edges."""
        base = set(self.base_edges())
        out = set()
        for t in self.t_set:
            for w in range(self.n):
                if w != t:
                    e = norm_edge(t, w)
                    if e not in base:
                        out.add(e)
        return sorted(out)

    def lower_graph(self) -> Graph:
        return Graph(self.n, self.base_edges())

    def upper_graph(self) -> Graph:
        return Graph(self.n, self.base_edges() + self.allowed_extra_edges())


def make_family_graph(d: FamilyDescriptor, extra_edges: Iterable[Edge] = ()) -> Graph:
    extra = {norm_edge(*e) for e in extra_edges}
    bad = extra - set(d.allowed_extra_edges())
    if bad:
        raise FamilyError(f"edges outside the allowed augmentation: {sorted(bad)}")
    g = Graph(d.n, d.base_edges() + sorted(extra))
    for w in d.i_set:
        if g.degree(w) == 0:
            raise FamilyError(f"independent vertex {w} has no incident edge")
    if not is_connected(g):
        raise FamilyError("family member must be connected")
    return g


def in_family(g: Graph, d: FamilyDescriptor) -> bool:
    """Membership under the descriptor's labeling.

    An edge lies in the upper graph exactly when it touches T, so the test
    is: base present, every edge touches T, connected, and for the hatted
    family nu_2 equals k.
    """
    if g.n != d.n:
        return False
    if not set(d.base_edges()) <= g.edges:
        return False
    t = d.t_set
    if any(u not in t and v not in t for u, v in g.edges):
        return False
    if not is_connected(g):
        return False
    if d.hatted and packing_number(g) != d.k:
        return False
    return True


@dataclass(frozen=True)
class FamilyLabeling:
    descriptor: FamilyDescriptor
    to_graph: tuple[int, ...]  # descriptor label -> vertex of g


def _base_embeddings(g: Graph, base: ShapeKind, k: int) -> Iterator[tuple[int, ...]]:
    """Vertex sequences of g realizing the base as a (not necessarily induced) subgraph."""
    target = _base_size(base, k)
    seq: list[int] = []

    def grow(used: int) -> Iterator[tuple[int, ...]]:
        if len(seq) == target:
            if base is ShapeKind.CYCLE and not g.has_edge(seq[-1], seq[0]):
                return
            yield tuple(seq)
            return
        for w in bits(g.adj[seq[-1]] & ~used):
            if base is ShapeKind.CYCLE and w < seq[0]:
                continue
            seq.append(w)
            yield from grow(used | 1 << w)
            seq.pop()

    for s in range(g.n):
        seq.append(s)
        yield from grow(1 << s)
        seq.pop()


def find_family_labeling(g: Graph, base: ShapeKind | str, k: int, hatted: bool = False,
                         limit: int = 12) -> FamilyLabeling | None:
    """Search for a labeling placing g in the cycle/path family of length k."""
    base = ShapeKind(base) if isinstance(base, str) else base
    if g.n > limit:
        raise FamilyError(f"unlabeled recognition limited to n <= {limit}")
    nb = _base_size(base, k)
    if g.n < nb or not is_connected(g):
        return None
    if hatted and packing_number(g) != k:
        return None
    covers = base_min_covers(base, k)
    for emb in _base_embeddings(g, base, k):
        rest = [v for v in range(g.n) if v not in emb]
        for t in covers:
            tm = mask_of(emb[i] for i in t)
            if all(tm >> u & 1 or tm >> v & 1 for u, v in g.edges):
                d = FamilyDescriptor.make(base, k, t, len(rest), hatted)
                return FamilyLabeling(d, emb + tuple(rest))
    return None


def counterexample_descriptor(k: int) -> FamilyDescriptor:
    """Odd cycle with T = even vertices, one extra independent vertex."""
    if k < 5 or k % 2 == 0:
        raise FamilyError("the separating construction needs odd k >= 5")
    return FamilyDescriptor.make(ShapeKind.CYCLE, k, range(0, k, 2), 1)


def counterexample_hatted(k: int) -> Graph:
    """C^k plus a vertex joined to two adjacent cover vertices (0 and k-1).

    Lies in the unhatted cycle family but has nu_2 = k + 1.
    """
    d = counterexample_descriptor(k)
    return make_family_graph(d, [(0, k), (k - 1, k)])


# --- random members -----------------------------------------------------------------


def random_descriptor(base: ShapeKind | str, k: int, rng: random.Random, max_i: int = 3,
                      hatted: bool = False) -> FamilyDescriptor:
    base = ShapeKind(base) if isinstance(base, str) else base
    t = rng.choice(base_min_covers(base, k))
    return FamilyDescriptor.make(base, k, t, rng.randint(0, max_i), hatted)


def sample_family_member(d: FamilyDescriptor, rng: random.Random, density: float | None = None,
                         max_tries: int = 1000) -> tuple[Graph, list[Edge]]:
    """Random connected member of the described family, with its extra edges.

    Every independent vertex receives at least one edge to T. Hatted
    families are sampled by rejection on nu_2 = k.
    """
    allowed = d.allowed_extra_edges()
    t_sorted = sorted(d.t_set)
    for _ in range(max_tries):
        p = rng.random() if density is None else density
        extra = {e for e in allowed if rng.random() < p}
        for w in d.i_set:
            if not any(w in e for e in extra):
                extra.add(norm_edge(rng.choice(t_sorted), w))
        g = make_family_graph(d, extra)
        if d.hatted and packing_number(g) != d.k:
            continue
        return g, sorted(extra)
    raise FamilyError("no hatted member found within the sampling budget")


def family_invariants(g: Graph) -> tuple[int, int]:
    return cover_number(g), packing_number(g)


# --- text records -----------------------------------------------------------------

_RECORD = re.compile(
    r"^(?P<base>cycle|path)\s+k=(?P<k>\d+)\s+T=(?P<t>[\d,]*)"
    r"(?:\s+I=(?P<i>\d+))?(?:\s+extra=(?P<extra>[\d,\-]*))?(?:\s+(?P<hat>hat))?\s*$"
)


def format_descriptor(d: FamilyDescriptor, extra: Iterable[Edge] = ()) -> str:
    parts = [d.base.value, f"k={d.k}", "T=" + ",".join(map(str, sorted(d.t_set))),
             f"I={len(d.i_set)}"]
    extra = sorted(norm_edge(*e) for e in extra)
    if extra:
        parts.append("extra=" + ",".join(f"{u}-{v}" for u, v in extra))
    if d.hatted:
        parts.append("hat")
    return " ".join(parts)


def parse_descriptor(text: str) -> tuple[FamilyDescriptor, list[Edge]]:
    """Inverse of format_descriptor, e.g. ``cycle k=4 T=0,2 I=1 extra=0-4``."""
    m = _RECORD.match(text.strip())
    if not m:
        raise FamilyError(f"bad family record {text!r}")
    t = [int(x) for x in m["t"].split(",") if x]
    extra = []
    if m["extra"]:
        for item in m["extra"].split(","):
            u, _, v = item.partition("-")
            if not (u.isdigit() and v.isdigit()):
                raise FamilyError(f"bad extra edge {item!r}")
            extra.append(norm_edge(int(u), int(v)))
    d = FamilyDescriptor.make(m["base"], int(m["k"]), t, int(m["i"] or 0), bool(m["hat"]))
    return d, extra
