import pytest

from stardec import generators as gen
from stardec.graph_core import (
    CyclePath,
    GraphError,
    boundary,
    build_graph,
    cycle_components,
    delete_vertices,
    induced_subgraph,
    is_cubic,
    subgraph_from_edges,
)


def test_build_complete_graph():
    g = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert g.n == 4 and g.m == 6


def test_duplicate_edges_dropped():
    g = build_graph(3, [(0, 1), (1, 0)])
    assert g.edges == ((0, 1),)


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 2)], [(-1, 0)]])
def test_bad_edges_rejected(bad):
    with pytest.raises(GraphError):
        build_graph(2, bad)


def test_edges_are_canonical():
    g = build_graph(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges == ((0, 1), (0, 2), (2, 3))
    assert g.edge_id(2, 0) == g.edge_id(0, 2) == 1


def test_is_cubic(petersen):
    assert is_cubic(gen.complete4())
    assert is_cubic(petersen)
    assert not is_cubic(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))


def test_induced_outer_cycle(petersen):
    sub, relabel = induced_subgraph(petersen, range(5))
    assert sub.m == 5 and all(sub.degree(v) == 2 for v in range(5))
    assert relabel == {v: v for v in range(5)}


def test_induced_small_cases():
    k4 = gen.complete4()
    sub, _ = induced_subgraph(k4, [0, 1])
    assert sub.m == 1
    empty, _ = induced_subgraph(k4, [])
    assert empty.n == 0 and empty.m == 0


def test_delete_vertex_relabels(petersen):
    sub, relabel = delete_vertices(petersen, [0])
    assert sub.n == 9 and sub.m == 12
    assert 0 not in relabel and relabel[1] == 0


def test_boundary(petersen):
    assert boundary(petersen, range(5, 10)) == (5, 6, 7, 8, 9)
    assert boundary(gen.complete4(), range(4)) == ()
    # hexagon with chord 0-3: the four chord-free vertices
    assert boundary(gen.fixture_e5(), range(6)) == (1, 2, 4, 5)


def test_cycle_components_after_removing_spokes(petersen):
    spokes = {petersen.edge_id(i, i + 5) for i in range(5)}
    rest = subgraph_from_edges(petersen, set(range(petersen.m)) - spokes)
    cycles = cycle_components(rest)
    assert [set(c.vertices) for c in cycles] == [set(range(5)), set(range(5, 10))]
    assert cycles[1].vertices == (5, 7, 9, 6, 8)


def test_cycle_components_single_cycle():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert cycle_components(g) == [CyclePath((0, 1, 2, 3))]


def test_cycle_components_rejects_path():
    with pytest.raises(GraphError):
        cycle_components(build_graph(3, [(0, 1), (1, 2)]))


def test_cycle_path_pairs():
    assert CyclePath((0, 1, 2)).pairs() == [(0, 1), (1, 2), (2, 0)]
    assert CyclePath((0, 1, 2), closed=False).pairs() == [(0, 1), (1, 2)]
