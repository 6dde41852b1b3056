"""Path/cycle decomposition of a 2-packing and parity bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, LinearShape, ShapeKind, bits, components_of
from .solvers import EdgePacking, VertexCover, is_2packing


@dataclass(frozen=True)
class PackingComponent:
    shape: LinearShape
    edge_count: int
    vertex_ids: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def is_cycle(self) -> bool:
        return self.shape.kind is ShapeKind.CYCLE

    @property
    def cover_number(self) -> int:
        """beta of a path or cycle with this many edges."""
        return (self.edge_count + 1) // 2


@dataclass(frozen=True)
class PackingDecomposition:
    components: tuple[PackingComponent, ...]
    covered_vertices: frozenset[int]
    outside_vertices: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.components)

    def component_of(self, v: int) -> int | None:
        for i, c in enumerate(self.components):
            if v in c.vertex_ids:
                return i
        return None

    def odd_first(self) -> "PackingDecomposition":
        """Same decomposition with odd-length components listed first."""
        comps = sorted(self.components, key=lambda c: c.edge_count % 2 == 0)
        return PackingDecomposition(tuple(comps), self.covered_vertices, self.outside_vertices)


@dataclass(frozen=True)
class ParityProfile:
    even_components: int
    odd_components: int


def _walk(adj: list[int], comp: int, is_cycle: bool) -> tuple[int, ...]:
    if is_cycle:
        start = (comp & -comp).bit_length() - 1
        nbrs = list(bits(adj[start]))
        prev, cur = start, min(nbrs)
    else:
        ends = [v for v in bits(comp) if adj[v].bit_count() == 1]
        start = min(ends)
        prev, cur = start, next(bits(adj[start]))
    order = [start]
    while cur != start:
        order.append(cur)
        nxt = adj[cur] & ~(1 << prev)
        if not nxt:
            break
        prev, cur = cur, (nxt & -nxt).bit_length() - 1
    return tuple(order)


def decompose(g: Graph, r: EdgePacking) -> PackingDecomposition:
    """Components of G[r] ordered by least vertex id.

    Cycles are walked from their least vertex towards its lesser neighbour;
    paths from their lesser endpoint.
    """
    if not r.edges <= g.edges:
        raise GraphError("packing contains edges outside the graph")
    if not is_2packing(r.edges):
        raise GraphError("edge set has a vertex of load > 2")
    adj = [0] * g.n
    support = 0
    for u, v in r.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        support |= 1 << u | 1 << v
    comps = []
    for comp in components_of(adj, support):
        edges = frozenset(e for e in r.edges if comp >> e[0] & 1)
        cyc = all(adj[v].bit_count() == 2 for v in bits(comp))
        shape = LinearShape(ShapeKind.CYCLE if cyc else ShapeKind.PATH, len(edges))
        comps.append(PackingComponent(shape, len(edges), _walk(adj, comp, cyc), edges))
    covered = frozenset(bits(support))
    outside = frozenset(range(g.n)) - covered
    return PackingDecomposition(tuple(comps), covered, outside)


def parity_profile(d: PackingDecomposition) -> ParityProfile:
    odd = sum(1 for c in d.components if c.edge_count % 2)
    return ParityProfile(len(d.components) - odd, odd)


def component_covers(g: Graph, d: PackingDecomposition, t: VertexCover) -> list[VertexCover]:
    """Restriction of the cover ``t`` to each component's vertex set."""
    return [VertexCover(t.vertices & frozenset(c.vertex_ids)) for c in d.components]


def component_graph(c: PackingComponent) -> Graph:
    """The component as a standalone path/cycle on 0..len(vertex_ids)-1, walk order."""
    n = len(c.vertex_ids)
    if c.is_cycle:
        return Graph(n, ((i, (i + 1) % n) for i in range(n)))
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def linear_min_covers(c: PackingComponent) -> list[frozenset[int]]:
    """All minimum covers of a path/cycle component, in original vertex ids."""
    out = []
    for combo in combinations(c.vertex_ids, c.cover_number):
        chosen = set(combo)
        if all(u in chosen or v in chosen for u, v in c.edges):
            out.append(frozenset(combo))
    return out
