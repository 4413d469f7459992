import itertools

import pytest

from stardec import generators as gen
from stardec.graph_core import CyclePath, GraphError, build_graph
from stardec.matching_star import (
    BudgetExceeded,
    ContractionGraph,
    CycleCover,
    contraction_diameter,
    contraction_graph,
    cover_from_matching,
    enumerate_perfect_matchings,
    find_star_matching,
    is_perfect_matching,
    is_star,
    validate_cover,
)


def test_k4_has_three_matchings():
    assert len(list(enumerate_perfect_matchings(gen.complete4()))) == 3


def test_petersen_matchings_match_subset_count(petersen):
    found = set(enumerate_perfect_matchings(petersen))
    # independent count over all 5-edge subsets
    brute = {c for c in itertools.combinations(range(petersen.m), 5) if is_perfect_matching(petersen, c)}
    assert found == brute and len(found) == 6


def test_odd_order_yields_nothing():
    assert list(enumerate_perfect_matchings(build_graph(3, [(0, 1), (1, 2), (0, 2)]))) == []


def test_spokes_contract_to_k2(petersen):
    spokes = petersen.edge_ids((i, i + 5) for i in range(5))
    cg = contraction_graph(petersen, cover_from_matching(petersen, spokes))
    assert cg == ContractionGraph(2, frozenset({(0, 1)}))


def test_hamiltonian_complement_contracts_to_point():
    k4 = gen.complete4()
    cover = cover_from_matching(k4, k4.edge_ids([(0, 2), (1, 3)]))
    cg = contraction_graph(k4, cover)
    assert cg.nodes == 1 and not cg.edges


def test_e4_spokes_give_two_leaf_star():
    g = gen.fixture_e4()
    cover = cover_from_matching(g, g.edge_ids([(0, 6), (2, 7), (4, 8), (1, 9), (3, 10), (5, 11)]))
    cg = contraction_graph(g, cover)
    assert cg.edges == frozenset({(0, 1), (0, 2)})
    assert is_star(cg) == 0


def test_is_star_cases():
    assert is_star(ContractionGraph(2, frozenset({(0, 1)}))) == 0
    assert is_star(ContractionGraph(2, frozenset({(0, 1)})), designated_centre=1) == 1
    assert is_star(ContractionGraph(3, frozenset({(0, 1), (1, 2)}))) == 1
    assert is_star(ContractionGraph(3, frozenset({(0, 1), (1, 2), (0, 2)}))) is None
    assert is_star(ContractionGraph(4, frozenset({(0, 1), (1, 2), (2, 3)}))) is None


def test_find_star_matching(petersen):
    cover = find_star_matching(petersen)
    assert len(cover.cycles) == 2
    assert len(find_star_matching(gen.complete4()).cycles) == 1


def test_every_petersen_matching_leaves_two_five_cycles(petersen):
    for m in enumerate_perfect_matchings(petersen):
        cover = cover_from_matching(petersen, m)
        assert sorted(len(c) for c in cover.cycles) == [5, 5]


def test_budget_exhaustion_is_not_absence():
    with pytest.raises(BudgetExceeded):
        find_star_matching(gen.cube(), budget=0)


def test_validate_cover_rejects_wrong_centre(petersen):
    cover = find_star_matching(petersen)
    validate_cover(petersen, cover)
    bad = CycleCover(cover.matching, cover.cycles + (CyclePath((0, 1, 2)),), 0)
    with pytest.raises(GraphError):
        validate_cover(petersen, bad)


def test_contraction_diameter_agrees_with_star():
    star = ContractionGraph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
    path = ContractionGraph(4, frozenset({(0, 1), (1, 2), (2, 3)}))
    assert contraction_diameter(star) == 2 and is_star(star) == 0
    assert contraction_diameter(path) == 3 and is_star(path) is None
