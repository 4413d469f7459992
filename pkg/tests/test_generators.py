import networkx as nx
import pytest

from stardec import generators as gen
from stardec.graph_core import GraphError, build_graph, delete_vertices, is_cubic
from stardec.matching_star import contraction_graph, find_star_matching, is_star


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_petersen_shape(petersen):
    assert (petersen.n, petersen.m) == (10, 15)
    assert is_cubic(petersen)
    assert nx.girth(to_nx(petersen)) == 5
    assert nx.is_isomorphic(to_nx(petersen), nx.petersen_graph())


def test_flower_snark_j5():
    g = gen.flower_snark(5)
    assert (g.n, g.m) == (20, 30) and is_cubic(g)


@pytest.mark.parametrize("k", [3, 4, 6])
def test_flower_snark_rejects_bad_k(k):
    with pytest.raises(GraphError):
        gen.flower_snark(k)


def test_gadget_extension(petersen):
    g, lab = gen.extend_hypohamiltonian(petersen, 0)
    assert g.n == 24 and is_cubic(g)
    assert gen.vertex_connectivity_at_least(g, 3)
    assert set(g.neighbors(lab.z_prime)) == {lab.a, lab.b, lab.c}
    named = [lab.x, lab.y, lab.x_prime, lab.y_prime, lab.z_prime, lab.a, lab.b, lab.c]
    assert len(set(named)) == len(named)
    assert set(lab.h_minus) == set(range(1, 10))


def test_gadget_errors(petersen):
    with pytest.raises(GraphError):
        gen.extend_hypohamiltonian(petersen, 10)
    with pytest.raises(GraphError):
        gen.extend_hypohamiltonian(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 0)


def test_gadget_paths_are_hamiltonian(petersen):
    g, lab = gen.extend_hypohamiltonian(petersen, 0)
    gadget = set(lab.local.values()) - {lab.z_prime}
    for (s, t), path in gen.gadget_paths().items():
        ids = [lab.local[name] for name in path]
        assert set(ids) == gadget and len(ids) == 14
        assert all(g.has_edge(u, v) for u, v in zip(ids, ids[1:]))
        assert {ids[0], ids[-1]} == {lab.local[s], lab.local[t]}
    assert set(gen.gadget_paths()) == {("a", "b"), ("b", "c"), ("c", "a")}


def test_k4_composition(petersen):
    parts = [gen.extend_hypohamiltonian(petersen, 0) for _ in range(3)]
    g, cover = gen.k4_compose(parts)
    assert (g.n, g.m) == (70, 105) and is_cubic(g)
    assert gen.vertex_connectivity_at_least(g, 3)
    assert len(cover.cycles) == 4
    cg = contraction_graph(g, cover)
    assert is_star(cg, cover.centre) == cover.centre and len(cg.edges) == 3


def test_k4_compose_needs_three(petersen):
    with pytest.raises(GraphError):
        gen.k4_compose([gen.extend_hypohamiltonian(petersen, 0)] * 2)


def test_connectivity_examples(petersen):
    assert gen.vertex_connectivity_at_least(gen.complete4(), 3)
    assert gen.vertex_connectivity_at_least(petersen, 3)
    bridged = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
    assert not gen.vertex_connectivity_at_least(bridged, 2)
    assert not gen.vertex_connectivity_at_least(gen.complete4(), 4)


@pytest.mark.parametrize("name", sorted(gen.FIXTURES))
def test_connectivity_matches_networkx(name):
    g = gen.fixture(name)
    kappa = nx.node_connectivity(to_nx(g))
    assert gen.vertex_connectivity_at_least(g, kappa)
    assert not gen.vertex_connectivity_at_least(g, kappa + 1)


def test_random_seed_one_resembles_e4():
    g, cover = gen.random_star_like_with_cover(1, 6, [3, 3], 0)
    assert g.n == 12
    assert sorted(len(c) for c in cover.cycles) == [3, 3, 6]
    assert gen.random_star_like(1, 6, [3, 3], 0) == g


def test_random_is_deterministic():
    a = gen.random_star_like_with_cover(9, 10, [5, 4, 3], 2)
    b = gen.random_star_like_with_cover(9, 10, [5, 4, 3], 2)
    assert a == b


def test_random_parity_error():
    with pytest.raises(GraphError):
        gen.random_star_like(1, 6, [3], 0)


def test_random_too_many_boundary_vertices():
    with pytest.raises(GraphError):
        gen.random_star_like(1, 6, [4, 4], 0)


@pytest.mark.parametrize("seed", range(1, 21))
def test_random_outputs_are_star_like(seed):
    centre, tips, chords = gen.random_suite_parameters(seed)
    g, cover = gen.random_star_like_with_cover(seed, centre, tips, chords)
    assert is_cubic(g) and gen.vertex_connectivity_at_least(g, 3)
    assert is_star(contraction_graph(g, cover), cover.centre) is not None
    assert find_star_matching(g, budget=100_000) is not None


def test_unknown_fixture():
    with pytest.raises(GraphError):
        gen.fixture("dodecahedron")
