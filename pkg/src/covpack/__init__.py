"""Exact covering numbers and 2-packing numbers of small graphs, with
generators for the extremal families and exhaustive claim checks."""

from .graph import (
    Graph,
    LinearShape,
    ShapeKind,
    canonical_form,
    classify_linear,
    complete_graph,
    cycle_graph,
    edge_induced_subgraph,
    is_complete,
    is_connected,
    max_degree,
    parse_edge_list,
    parse_graph6,
    path_graph,
    render_edge_list,
    star_graph,
    to_graph6,
)
from .solvers import (
    EdgePacking,
    IndependentSet,
    VertexCover,
    cover_number,
    enumerate_max_2packings,
    max_2packing,
    max_independent_set,
    min_component_max_2packing,
    min_vertex_cover,
    packing_number,
)

__version__ = "0.1.0"
