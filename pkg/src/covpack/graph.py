"""Simple undirected graphs over dense integer vertex ids.

Vertex sets are handled internally as int bitmasks; the public surface uses
frozensets and sorted tuples so results are easy to read and compare.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]

MAX_GRAPH6_N = 62
CANONICAL_LIMIT = 12


class GraphError(ValueError):
    """Raised for structurally invalid graphs or bad arguments."""


class GraphParseError(ValueError):
    """Base class for text parsing failures; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph6HeaderError(GraphParseError):
    pass


class Graph6ByteError(GraphParseError):
    pass


class Graph6LengthError(GraphParseError):
    pass


class Graph6TrailingError(GraphParseError):
    pass


class EdgeListError(GraphParseError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        normed = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside [0, {n})")
            normed.add(norm_edge(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normed))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edge_list)})"

    def __reduce__(self):
        return (Graph, (self.n, self.edge_list))

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighborhood bitmask per vertex."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, u: int) -> frozenset[int]:
        return frozenset(bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def incident(self, u: int) -> list[Edge]:
        """Edges incident to ``u``, in ascending order."""
        return [norm_edge(u, v) for v in bits(self.adj[u])]

    def relabel(self, perm: Mapping[int, int] | list[int]) -> "Graph":
        """Image of the graph under ``perm`` (old id -> new id)."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Vertex-induced subgraph, relabeled densely; returns (graph, new->old)."""
        keep = tuple(sorted(set(vertices)))
        if not keep:
            raise GraphError("induced subgraph on an empty vertex set")
        index = {v: i for i, v in enumerate(keep)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), sub), keep

    def add_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(extra))


# --- standard constructors ------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(k, ((i, (i + 1) % k) for i in range(k)))


def path_graph(k: int) -> Graph:
    """Path with ``k`` edges (``k + 1`` vertices)."""
    if k < 0:
        raise GraphError("path length must be >= 0")
    return Graph(k + 1, ((i, i + 1) for i in range(k)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


# --- graph6 ----------------------------------------------------------------

_G6_PREFIX = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62)."""
    s = text.strip()
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6HeaderError("graph6 long form (n > 62) is not supported")
    if not 63 <= head < 126:
        raise Graph6HeaderError(f"bad size byte {s[0]!r}")
    n = head - 63
    if n < 1:
        raise Graph6HeaderError("graph6 with zero vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    for ch in body:
        if not 63 <= ord(ch) <= 126:
            raise Graph6ByteError(f"byte {ch!r} outside the graph6 range")
    if len(body) < nbytes:
        raise Graph6LengthError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6TrailingError(f"{len(body) - nbytes} trailing bytes after graph data")

    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise Graph6TrailingError("nonzero padding bits")
    value >>= pad

    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise GraphError("graph6 short form supports n <= 62")
    out = [chr(g.n + 63)]
    acc = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


# --- edge lists --------------------------------------------------------------


def _parse_header(line: str, lineno: int) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise EdgeListError("expected header 'n <count>'", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise EdgeListError(f"bad vertex count {parts[1]!r}", lineno) from None
    if n < 1:
        raise EdgeListError("vertex count must be >= 1", lineno)
    return n


def _parse_edge_lines(n: int, lines: list[tuple[int, str]]) -> Graph:
    seen: set[Edge] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError("expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex out of range in {u} {v} (n={n})", lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise EdgeListError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
    return Graph(n, seen)


def _content_lines(text: str, start: int = 1) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=start):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse one graph in the ``n <count>`` header + ``u v`` lines format."""
    graphs = list(iter_edge_lists(text))
    if not graphs:
        raise EdgeListError("missing 'n <count>' header", 1)
    if len(graphs) > 1:
        raise EdgeListError("more than one graph in input")
    return graphs[0]


def iter_edge_lists(text: str) -> Iterator[Graph]:
    """Parse a stream of edge-list graphs, each introduced by its own header."""
    lines = _content_lines(text)
    if lines and not lines[0][1].startswith("n"):
        raise EdgeListError("expected header 'n <count>'", lines[0][0])
    i = 0
    while i < len(lines):
        lineno, header = lines[i]
        n = _parse_header(header, lineno)
        j = i + 1
        while j < len(lines) and not lines[j][1].startswith("n"):
            j += 1
        yield _parse_edge_lines(n, lines[i + 1:j])
        i = j


def render_edge_list(g: Graph) -> str:
    rows = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(rows) + "\n"


# --- predicates ----------------------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of G restricted to ``within`` (bitmask), ordered by least id."""
    return components_of(g.adj, g.all_mask if within is None else within)


def components_of(adj: tuple[int, ...] | list[int], remaining: int) -> list[int]:
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.all_mask


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(not (g.adj[v] & m) for v in bits(m))


def is_cover(g: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(m >> u & 1 or m >> v & 1 for u, v in g.edges)


@dataclass(frozen=True)
class EdgeInducedSubgraph:
    """G[R] relabeled densely; ``to_parent[i]`` is the original id of vertex ``i``."""

    graph: Graph
    to_parent: tuple[int, ...]

    @cached_property
    def from_parent(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.to_parent)}


def edge_induced_subgraph(g: Graph, r: Iterable[Edge]) -> EdgeInducedSubgraph:
    """Subgraph formed by the edges ``r`` and their endpoints only."""
    chosen = {norm_edge(*e) for e in r}
    missing = chosen - g.edges
    if missing:
        raise GraphError(f"edges not in graph: {sorted(missing)}")
    if not chosen:
        raise GraphError("edge-induced subgraph of an empty edge set")
    support = sorted({v for e in chosen for v in e})
    index = {v: i for i, v in enumerate(support)}
    sub = Graph(len(support), ((index[u], index[v]) for u, v in chosen))
    return EdgeInducedSubgraph(sub, tuple(support))


class ShapeKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    OTHER = "other"


@dataclass(frozen=True)
class LinearShape:
    kind: ShapeKind
    length: int | None = None

    def __post_init__(self):
        if self.kind is ShapeKind.CYCLE and (self.length is None or self.length < 3):
            raise GraphError("a cycle shape needs length >= 3")
        if self.kind is ShapeKind.PATH and (self.length is None or self.length < 1):
            raise GraphError("a path shape needs length >= 1")

    def __str__(self) -> str:
        if self.kind is ShapeKind.OTHER:
            return "Other"
        return f"{self.kind.value.capitalize()}({self.length})"


def classify_linear(g: Graph) -> LinearShape:
    if not is_connected(g):
        raise GraphError("classify_linear needs a connected graph")
    degs = g.degrees()
    if g.m and all(d == 2 for d in degs):
        return LinearShape(ShapeKind.CYCLE, g.m)
    if g.m and degs.count(1) == 2 and all(d in (1, 2) for d in degs):
        return LinearShape(ShapeKind.PATH, g.m)
    return LinearShape(ShapeKind.OTHER)


# --- canonical labeling -------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; label-invariant."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(sig):
                out.append(sig[key])
        cells = out
    return cells


@dataclass
class _CanonSearch:
    adj: tuple[int, ...]
    n: int
    best: tuple[int, ...] | None = None
    best_lab: list[int] | None = None
    autos: list[list[int]] = field(default_factory=list)

    def certificate(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            for w in bits(self.adj[v]):
                r |= 1 << pos[w]
            rows.append(r)
        return tuple(rows)

    def leaf(self, lab: list[int]) -> None:
        cert = self.certificate(lab)
        if self.best is None or cert > self.best:
            self.best, self.best_lab = cert, lab
        elif cert == self.best:
            # best_lab[i] -> lab[i] is an automorphism
            perm = [0] * self.n
            for a, b in zip(self.best_lab, lab):
                perm[a] = b
            self.autos.append(perm)

    def search(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self.leaf([c[0] for c in cells])
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self.search(child, prefix + [v])

    def _same_orbit(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [p for p in self.autos if all(p[x] == x for x in prefix)]
        if not gens:
            return False
        orbit = set(explored)
        stack = list(explored)
        while stack:
            x = stack.pop()
            for p in gens:
                y = p[x]
                if y not in orbit:
                    if y == v:
                        return True
                    orbit.add(y)
                    stack.append(y)
        return v in orbit


def canonical_labeling(g: Graph, limit: int = CANONICAL_LIMIT) -> list[int]:
    """Vertex order ``lab`` such that relabeling vertex lab[i] -> i is canonical."""
    if g.n > limit:
        raise GraphError(f"canonical form limited to n <= {limit}, got {g.n}")
    s = _CanonSearch(g.adj, g.n)
    degree_cells: dict[int, list[int]] = {}
    for v in range(g.n):
        degree_cells.setdefault(g.degree(v), []).append(v)
    s.search([degree_cells[d] for d in sorted(degree_cells)], [])
    return s.best_lab


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return to_graph6(canonical_graph(g, limit)).encode()


def canonical_graph(g: Graph, limit: int = CANONICAL_LIMIT) -> Graph:
    lab = canonical_labeling(g, limit)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def bfs_order(g: Graph, start: int = 0) -> list[int]:
    seen = {start}
    order = []
    q = deque([start])
    while q:
        u = q.popleft()
        order.append(u)
        for v in bits(g.adj[u]):
            if v not in seen:
                seen.add(v)
                q.append(v)
    return order
