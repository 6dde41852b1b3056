import pytest

from covpack.graph import Graph, GraphError, ShapeKind, cycle_graph, path_graph
from covpack.harness import enumerate_connected
from covpack.solvers import (
    EdgePacking,
    all_min_covers,
    brute_force_beta,
    cover_number,
    enumerate_max_2packings,
    max_2packing,
    min_vertex_cover,
    packing_number,
)
from covpack.structure import (
    PackingDecomposition,
    component_covers,
    component_graph,
    decompose,
    linear_min_covers,
    parity_profile,
)

TWO_TRIANGLES = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def test_decompose_cycle_with_chord():
    g = cycle_graph(6).add_edges([(0, 3)])
    d = decompose(g, EdgePacking(cycle_graph(6).edges))
    assert [str(c.shape) for c in d.components] == ["Cycle(6)"]
    assert d.components[0].vertex_ids == (0, 1, 2, 3, 4, 5)
    assert d.outside_vertices == frozenset()


def test_decompose_path():
    d = decompose(path_graph(4), EdgePacking(path_graph(4).edges))
    assert [str(c.shape) for c in d.components] == ["Path(4)"]
    assert d.components[0].vertex_ids == (0, 1, 2, 3, 4)


def test_decompose_two_triangles():
    r = EdgePacking(TWO_TRIANGLES.edges - {(2, 3)})
    d = decompose(TWO_TRIANGLES, r)
    assert [str(c.shape) for c in d.components] == ["Cycle(3)", "Cycle(3)"]
    assert {2, 3} <= d.covered_vertices


def test_decompose_walk_orders_and_outside():
    g = Graph(7, [(4, 2), (2, 5), (5, 4), (6, 1), (1, 3), (0, 1)])
    r = EdgePacking(frozenset({(2, 4), (2, 5), (4, 5), (1, 6), (1, 3)}))
    d = decompose(g, r)
    assert [c.vertex_ids for c in d.components] == [(3, 1, 6), (2, 4, 5)]
    assert d.outside_vertices == {0}
    assert d.covered_vertices | d.outside_vertices == set(range(7))


def test_decompose_rejects_overloaded_vertex():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(GraphError):
        decompose(g, EdgePacking(g.edges))


def _decomp(*lengths_kinds):
    from covpack.graph import LinearShape
    from covpack.structure import PackingComponent

    comps = tuple(PackingComponent(LinearShape(k, n), n, (), frozenset()) for k, n in lengths_kinds)
    return PackingDecomposition(comps, frozenset(), frozenset())


@pytest.mark.parametrize(
    "d, even, odd",
    [
        (_decomp((ShapeKind.CYCLE, 4), (ShapeKind.PATH, 2)), 2, 0),
        (_decomp((ShapeKind.CYCLE, 3), (ShapeKind.PATH, 4)), 1, 1),
        (_decomp(), 0, 0),
    ],
)
def test_parity_profile(d, even, odd):
    p = parity_profile(d)
    assert (p.even_components, p.odd_components) == (even, odd)


def test_odd_first():
    d = _decomp((ShapeKind.CYCLE, 4), (ShapeKind.CYCLE, 3)).odd_first()
    assert [c.edge_count for c in d.components] == [3, 4]


def test_component_covers_examples():
    c4 = cycle_graph(4)
    d = decompose(c4, EdgePacking(c4.edges))
    assert [c.vertices for c in component_covers(c4, d, min_vertex_cover(c4))] == [{0, 2}]
    p2 = path_graph(2)
    d = decompose(p2, EdgePacking(p2.edges))
    assert [c.vertices for c in component_covers(p2, d, min_vertex_cover(p2))] == [{1}]
    d = decompose(TWO_TRIANGLES, max_2packing(TWO_TRIANGLES))
    parts = component_covers(TWO_TRIANGLES, d, min_vertex_cover(TWO_TRIANGLES))
    assert len(parts) == 2 and all(len(p) == 2 for p in parts)


@pytest.mark.parametrize("g, k", [(cycle_graph(5), 5), (path_graph(5), 5), (cycle_graph(6), 6)])
def test_linear_min_covers_match_oracle(g, k):
    d = decompose(g, EdgePacking(g.edges))
    comp = d.components[0]
    assert comp.cover_number == brute_force_beta(g)
    assert set(linear_min_covers(comp)) == {c.vertices for c in all_min_covers(g)}
    assert component_graph(comp).m == k


def _connected_upto(n):
    return [g for m in range(2, n + 1) for g in enumerate_connected(m)]


@pytest.mark.parametrize("g", _connected_upto(6))
def test_lower_bound_structure_invariants(g):
    beta, nu2 = cover_number(g), packing_number(g)
    covers = all_min_covers(g)
    for r in enumerate_max_2packings(g):
        d = decompose(g, r)
        assert all(c.shape.kind in (ShapeKind.PATH, ShapeKind.CYCLE) for c in d.components)
        assert sum(c.edge_count for c in d.components) == len(r)
        prof = parity_profile(d)
        if nu2 % 2 == 0 and beta == nu2 // 2:
            assert prof.odd_components == 0
        if nu2 % 2 == 1 and beta == (nu2 + 1) // 2:
            assert prof.odd_components == 1
        if beta == (nu2 + 1) // 2:
            for t in covers:
                for comp, part in zip(d.components, component_covers(g, d, t)):
                    assert len(part) == comp.cover_number
                    assert all(u in part.vertices or v in part.vertices for u, v in comp.edges)
