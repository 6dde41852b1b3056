"""Exact covering and 2-packing solvers plus brute-force oracles.

Both exact solvers are branch-and-bound over bitmasks. Among optimal
certificates the lexicographically least one (as a sorted tuple of vertex
ids, resp. sorted edge pairs) is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Edge, Graph, GraphError, bits, components_of, mask_of

ENUMERATION_EDGE_LIMIT = 40
BRUTE_BETA_LIMIT = 20
BRUTE_NU2_LIMIT = 24


class SolverLimitError(GraphError):
    """Input exceeds a configured size limit."""


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class IndependentSet:
    vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class EdgePacking:
    edges: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.edges)

    def sorted(self) -> list[Edge]:
        return sorted(self.edges)

    def is_valid_for(self, g: Graph) -> bool:
        return self.edges <= g.edges and is_2packing(self.edges)


def is_2packing(edges) -> bool:
    load: dict[int, int] = {}
    for u, v in edges:
        load[u] = load.get(u, 0) + 1
        load[v] = load.get(v, 0) + 1
    return all(c <= 2 for c in load.values())


# --- vertex cover ------------------------------------------------------------


def _greedy_matching(adj: tuple[int, ...], alive: int) -> int:
    size = 0
    free = alive
    for u in bits(alive):
        if not free >> u & 1:
            continue
        nb = adj[u] & free
        if nb:
            v = (nb & -nb).bit_length() - 1
            free &= ~(1 << u | 1 << v)
            size += 1
    return size


def _cover_size(adj: tuple[int, ...], alive: int, ub: int) -> int:
    """Minimum cover size of G[alive] if it is < ub, otherwise some value >= ub."""
    forced = 0
    while True:
        reduced = False
        for v in bits(alive):
            nb = adj[v] & alive
            if not nb:
                alive &= ~(1 << v)
                reduced = True
            elif nb & (nb - 1) == 0:
                # degree-1 vertex: some optimum takes its neighbour
                alive &= ~(1 << v | nb)
                forced += 1
                reduced = True
                break
        if not reduced:
            break
    if forced >= ub:
        return ub
    if not alive:
        return forced
    budget = ub - forced
    if _greedy_matching(adj, alive) >= budget:
        return ub
    best_v, best_d = -1, -1
    for v in bits(alive):
        d = (adj[v] & alive).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    v = best_v
    nb = adj[v] & alive
    take_v = 1 + _cover_size(adj, alive & ~(1 << v), budget - 1)
    if take_v < budget:
        budget = take_v
    k = nb.bit_count()
    if k < budget:
        take_nb = k + _cover_size(adj, alive & ~(1 << v | nb), budget - k)
        if take_nb < budget:
            budget = take_nb
    return forced + budget


@lru_cache(maxsize=1 << 14)
def cover_number(g: Graph) -> int:
    """beta(G); 0 for edgeless graphs."""
    return _cover_size(g.adj, g.all_mask, g.n + 1)


def _cover_feasible(g: Graph, forced_in: int, forced_out: int, budget: int) -> bool:
    """Is there a cover of size <= budget containing forced_in and avoiding forced_out?"""
    adj = g.adj
    need = forced_in
    for v in bits(forced_out):
        if adj[v] & forced_out:
            return False
        need |= adj[v]
    if need & forced_out:
        return False
    left = budget - need.bit_count()
    if left < 0:
        return False
    alive = g.all_mask & ~need & ~forced_out
    return _cover_size(adj, alive, left + 1) <= left


@lru_cache(maxsize=1 << 12)
def min_vertex_cover(g: Graph) -> VertexCover:
    """Lexicographically least minimum vertex cover (ascending vertex ids)."""
    beta = cover_number(g)
    chosen, excluded = 0, 0
    for v in range(g.n):
        if _cover_feasible(g, chosen | 1 << v, excluded, beta):
            chosen |= 1 << v
        else:
            excluded |= 1 << v
    cover = frozenset(bits(chosen))
    assert len(cover) == beta
    return VertexCover(cover)


def max_independent_set(g: Graph) -> IndependentSet:
    cover = min_vertex_cover(g).mask
    return IndependentSet(frozenset(bits(g.all_mask & ~cover)))


def all_min_covers(g: Graph) -> list[VertexCover]:
    """Every minimum vertex cover, by exhaustive search (small graphs only)."""
    if g.n > BRUTE_BETA_LIMIT:
        raise SolverLimitError(f"all_min_covers limited to n <= {BRUTE_BETA_LIMIT}")
    beta = cover_number(g)
    out = []
    for combo in combinations(range(g.n), beta):
        m = mask_of(combo)
        if all(m >> u & 1 or m >> v & 1 for u, v in g.edges):
            out.append(VertexCover(frozenset(combo)))
    return out


# --- 2-packing ------------------------------------------------------------------


class _PackingSearch:
    """Depth-first include-first search over edges in ascending order."""

    def __init__(self, g: Graph):
        self.edges = g.edge_list
        self.n = g.n
        # incident edge indices per vertex
        self.inc = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u].append(i)
            self.inc[v].append(i)

    def bound(self, i: int, cap: list[int]) -> int:
        """Upper bound on edges addable from index i onward."""
        usable = 0
        tot = 0
        for j in range(i, len(self.edges)):
            u, v = self.edges[j]
            if cap[u] and cap[v]:
                usable += 1
        if usable == 0:
            return 0
        for v in range(self.n):
            if cap[v]:
                c = 0
                for j in self.inc[v]:
                    if j >= i:
                        a, b = self.edges[j]
                        if cap[a] and cap[b]:
                            c += 1
                tot += min(cap[v], c)
        return min(usable, tot // 2)

    def maximum(self) -> list[int]:
        best: list[int] = []
        cap = [2] * self.n
        chosen: list[int] = []
        m = len(self.edges)
        ceiling = min(m, self.n)

        def dfs(i: int) -> bool:
            nonlocal best
            if len(chosen) > len(best):
                best = chosen.copy()
                if len(best) == ceiling:
                    return True
            if i == m or len(chosen) + self.bound(i, cap) <= len(best):
                return False
            u, v = self.edges[i]
            if cap[u] and cap[v]:
                cap[u] -= 1
                cap[v] -= 1
                chosen.append(i)
                done = dfs(i + 1)
                chosen.pop()
                cap[u] += 1
                cap[v] += 1
                if done:
                    return True
            return dfs(i + 1)

        dfs(0)
        return best

    def all_of_size(self, target: int) -> Iterator[list[int]]:
        cap = [2] * self.n
        chosen: list[int] = []
        m = len(self.edges)

        def dfs(i: int) -> Iterator[list[int]]:
            if len(chosen) == target:
                yield chosen.copy()
                return
            if i == m or len(chosen) + self.bound(i, cap) < target:
                return
            u, v = self.edges[i]
            if cap[u] and cap[v]:
                cap[u] -= 1
                cap[v] -= 1
                chosen.append(i)
                yield from dfs(i + 1)
                chosen.pop()
                cap[u] += 1
                cap[v] += 1
            yield from dfs(i + 1)

        return dfs(0)


@lru_cache(maxsize=1 << 12)
def max_2packing(g: Graph) -> EdgePacking:
    """Lexicographically least maximum 2-packing."""
    s = _PackingSearch(g)
    return EdgePacking(frozenset(s.edges[i] for i in s.maximum()))


@lru_cache(maxsize=1 << 14)
def packing_number(g: Graph) -> int:
    """nu_2(G); 0 for edgeless graphs."""
    return len(max_2packing(g))


def enumerate_max_2packings(
    g: Graph, limit: int = ENUMERATION_EDGE_LIMIT, normalized: bool = False
) -> Iterator[EdgePacking]:
    """Lazily yield every maximum 2-packing exactly once, in include-first edge order.

    With ``normalized`` only packings whose edge-induced subgraph has no
    single-edge component are yielded.
    """
    if g.m > limit:
        raise SolverLimitError(f"enumeration limited to {limit} edges, graph has {g.m}")
    s = _PackingSearch(g)
    target = packing_number(g)

    def stream() -> Iterator[EdgePacking]:
        if target == 0:
            yield EdgePacking(frozenset())
            return
        for idx in s.all_of_size(target):
            p = EdgePacking(frozenset(s.edges[i] for i in idx))
            if normalized and has_single_edge_component(g, p):
                continue
            yield p

    return stream()


def packing_component_masks(g: Graph, r: EdgePacking) -> list[tuple[int, int]]:
    """(vertex mask, edge count) of each component of G[r], ordered by least vertex."""
    adj = [0] * g.n
    support = 0
    for u, v in r.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        support |= 1 << u | 1 << v
    out = []
    for comp in components_of(adj, support):
        e = sum(1 for u, v in r.edges if comp >> u & 1)
        out.append((comp, e))
    return out


def has_single_edge_component(g: Graph, r: EdgePacking) -> bool:
    return any(e == 1 for _, e in packing_component_masks(g, r))


def count_packing_components(g: Graph, r: EdgePacking) -> int:
    return len(packing_component_masks(g, r))


def min_component_max_2packing(g: Graph, limit: int = ENUMERATION_EDGE_LIMIT) -> EdgePacking:
    """A maximum 2-packing with the fewest components; first in enumeration order on ties."""
    best = None
    best_k = None
    for p in enumerate_max_2packings(g, limit):
        k = count_packing_components(g, p)
        if best_k is None or k < best_k:
            best, best_k = p, k
            if k <= 1:
                break
    return best


def cover_from_packing(g: Graph, r: EdgePacking) -> VertexCover:
    """Vertices of restricted degree 2 in G[r], for a maximum packing r."""
    if not r.is_valid_for(g):
        raise GraphError("not a 2-packing of the graph")
    if len(r) != packing_number(g):
        raise GraphError(f"packing of size {len(r)} is not maximum ({packing_number(g)})")
    if has_single_edge_component(g, r):
        raise GraphError("packing has a component with exactly one edge")
    load = [0] * g.n
    for u, v in r.edges:
        load[u] += 1
        load[v] += 1
    return VertexCover(frozenset(v for v in range(g.n) if load[v] == 2))


def constructive_cover(g: Graph) -> VertexCover:
    """Cover of size at most nu_2 - 1 built from a maximum packing (needs |E| > nu_2).

    Uses a path component when one exists; otherwise with all components
    cycles either exchanges an edge towards an uncovered vertex or drops
    one vertex from the full vertex set.
    """
    nu2 = packing_number(g)
    if g.m <= nu2:
        raise GraphError("constructive cover needs |E| > nu_2")
    for r in enumerate_max_2packings(g, normalized=True):
        comps = packing_component_masks(g, r)
        load = [0] * g.n
        for u, v in r.edges:
            load[u] += 1
            load[v] += 1
        is_path = [any(load[v] == 1 for v in bits(c)) for c, _ in comps]
        if any(is_path):
            return cover_from_packing(g, r)
        support = 0
        for c, _ in comps:
            support |= c
        outside = g.all_mask & ~support
        if not outside:
            return VertexCover(frozenset(range(1, g.n)))
        u = next(bits(outside))
        nb = g.adj[u] & support
        if not nb:
            continue
        v = next(bits(nb))
        e_v = min(e for e in r.edges if v in e)
        swapped = EdgePacking((r.edges - {e_v}) | {(min(u, v), max(u, v))})
        return cover_from_packing(g, swapped)
    raise GraphError("no maximum packing without single-edge components")


# --- brute-force oracles ---------------------------------------------------------


def brute_force_beta(g: Graph) -> int:
    """Smallest covering vertex subset, trying sizes in ascending order."""
    if g.n > BRUTE_BETA_LIMIT:
        raise SolverLimitError(f"brute_force_beta limited to n <= {BRUTE_BETA_LIMIT}")
    edges = list(g.edges)
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            s = set(combo)
            if all(u in s or v in s for u, v in edges):
                return size
    raise AssertionError("unreachable: the full vertex set is a cover")


def brute_force_nu2(g: Graph) -> int:
    """Largest edge subset with every vertex load <= 2, trying sizes in descending order."""
    if g.m > BRUTE_NU2_LIMIT:
        raise SolverLimitError(f"brute_force_nu2 limited to {BRUTE_NU2_LIMIT} edges")
    edges = list(g.edges)
    for size in range(min(len(edges), g.n), 0, -1):
        for combo in combinations(edges, size):
            load = [0] * g.n
            ok = True
            for u, v in combo:
                load[u] += 1
                load[v] += 1
                if load[u] > 2 or load[v] > 2:
                    ok = False
                    break
            if ok:
                return size
    return 0
