import pytest

from stardec import cycle_decomp as cd
from stardec.graph_core import CyclePath
from stardec.verify import verify_a_decomposition

from conftest import cycle_with_chords, pairs


def run(n, chords, fn, *args):
    g, ctx = cycle_with_chords(n, chords)
    with cd.record_constructions() as log:
        result = getattr(cd, fn)(ctx, *args)
    (rec,) = log
    assert verify_a_decomposition(ctx, rec.classification, result).ok
    return g, result, rec


def split(g, result):
    return pairs(g, result.tree_edges), pairs(g, result.cycle_edges), pairs(g, result.matching_edges)


def test_minimal_cycle_avoiding_vertex():
    _, ctx = cycle_with_chords(6, [(0, 3)])
    assert cd.find_minimal_cycle(ctx, avoid=1).vertices == (3, 4, 5, 0)
    assert cd.find_minimal_cycle(ctx).vertices == (0, 1, 2, 3)


def test_chordless_cycle_has_no_minimal_cycle():
    _, ctx = cycle_with_chords(5, [])
    assert cd.find_minimal_cycle(ctx) is None
    assert list(cd.minimal_cycles(ctx)) == []


def test_nested_chords_shrink_to_inner():
    _, ctx = cycle_with_chords(8, [(0, 4), (1, 3), (5, 7)])
    c = cd.find_minimal_cycle(ctx)
    assert c.vertices == (1, 2, 3)


def test_decomposition_given_by():
    g, ctx = cycle_with_chords(6, [(0, 3)])
    c = CyclePath((3, 4, 5, 0))
    tree, cyc, match = split(g, cd.decomposition_given_by(ctx, c, required_interior=1))
    assert tree == {(0, 1), (1, 2), (2, 3)}
    assert cyc == {(0, 3), (3, 4), (4, 5), (0, 5)}
    assert match == set()


def test_decomposition_given_by_reattaches_by_chord():
    g, ctx = cycle_with_chords(8, [(0, 3), (4, 7)])
    tree, cyc, match = split(g, cd.decomposition_given_by(ctx, CyclePath((0, 1, 2, 3))))
    assert cyc == {(0, 1), (1, 2), (2, 3), (0, 3)}
    assert tree == {(3, 4), (4, 5), (5, 6), (6, 7), (0, 7)}
    assert match == {(4, 7)}


def test_decomposition_given_by_precondition():
    _, ctx = cycle_with_chords(6, [(0, 3)])
    with pytest.raises(ValueError):
        cd.decomposition_given_by(ctx, CyclePath((3, 4, 5, 0)), a2=[1, 2])
    with pytest.raises(ValueError):
        cd.decomposition_given_by(ctx, CyclePath((3, 4, 5, 0)), required_interior=4)


def test_single_am_chordless():
    g, res, rec = run(5, [], "decompose_single_am", 0)
    assert rec.case == "chordless"
    assert res.tree_edges == () and len(res.cycle_edges) == 5


def test_single_am_with_chord():
    g, res, _ = run(6, [(0, 3)], "decompose_single_am", 1)
    tree, cyc, match = split(g, res)
    assert tree == {(0, 1), (1, 2), (2, 3)}
    assert cyc == {(0, 3), (3, 4), (4, 5), (0, 5)}
    assert match == set()


def test_single_am_rejects_chord_end():
    _, ctx = cycle_with_chords(6, [(0, 3)])
    with pytest.raises(ValueError):
        cd.decompose_single_am(ctx, 0)


def test_all_a2_follows_smallest_boundary_vertex():
    g, res, _ = run(6, [(0, 3)], "decompose_all_a2")
    _, ctx = cycle_with_chords(6, [(0, 3)])
    assert res == cd.decompose_single_am(ctx, 1)
    g, res, rec = run(5, [], "decompose_all_a2")
    assert rec.case == "chordless" and res.tree_edges == ()


def test_all_a2_needs_boundary():
    _, ctx = cycle_with_chords(4, [(0, 2), (1, 3)])
    with pytest.raises(ValueError):
        cd.decompose_all_a2(ctx)


def test_single_a0_chordless_removes_edge_to_smaller_neighbour():
    g, res, rec = run(5, [], "decompose_single_a0", 0)
    tree, cyc, match = split(g, res)
    assert rec.case == "chordless"
    assert match == {(0, 1)}
    assert tree == {(1, 2), (2, 3), (3, 4), (0, 4)}
    assert cyc == set()


def test_single_a0_short_chords():
    g, res, rec = run(6, [(1, 5), (2, 4)], "decompose_single_a0", 0)
    tree, cyc, match = split(g, res)
    assert rec.case == "short_chords"
    assert rec.checks == ("equal_length", "short_chord_pairing", "hamiltonian_q")
    # Hamiltonian path 0-5-1-2-4-3
    assert tree == {(0, 5), (1, 5), (1, 2), (2, 4), (3, 4)}
    assert match == {(0, 1), (2, 3), (4, 5)}
    assert cyc == set()


def test_single_a0_long_chord():
    g, res, rec = run(8, [(1, 5), (2, 7), (3, 6)], "decompose_single_a0", 0)
    tree, cyc, match = split(g, res)
    assert rec.case == "long_chord"
    assert cyc == {(2, 7), (6, 7), (3, 6), (2, 3)}
    assert tree == {(0, 1), (0, 7), (1, 2), (1, 5), (3, 4), (4, 5), (5, 6)}
    assert match == set()


def test_single_a0_easy_case_with_chord():
    g, res, rec = run(6, [(0, 3)], "decompose_single_a0", 1)
    assert rec.case == "minimal_cycle"
    # the minimal cycle avoiding 1 leaves the other boundary vertex 2 in the tree
    assert (1, 2) in pairs(g, res.tree_edges)


def test_single_a0_preconditions():
    _, ctx = cycle_with_chords(5, [(0, 2), (1, 3)])
    assert ctx.boundary == (4,)
    with pytest.raises(ValueError):
        cd.decompose_single_a0(ctx, 4)
    with pytest.raises(ValueError):
        cd.decompose_single_a0(ctx, 0)


def test_pair_ap_pentagram(petersen):
    ctx = cd.make_tip_context(petersen, CyclePath((5, 7, 9, 6, 8)))
    res = cd.decompose_pair_ap(ctx, 5, 6)
    assert pairs(petersen, res.cycle_edges) == {(5, 7), (7, 9), (6, 9)}
    assert pairs(petersen, res.tree_edges) == {(5, 8), (6, 8)}
    assert res.matching_edges == ()


def test_pair_ap_square():
    g, res, rec = run(4, [], "decompose_pair_ap", 0, 1)
    tree, cyc, match = split(g, res)
    assert cyc == {(0, 1)}
    assert tree == {(0, 3), (2, 3), (1, 2)}
    assert rec.checks == ("sequence_maximal",)


def test_pair_ap_with_span_chords():
    # x=0, y=1; the long arc 1..9,0 carries chords 2-5 and 6-8
    g, res, rec = run(10, [(2, 5), (6, 8)], "decompose_pair_ap", 0, 1)
    assert rec.case == "maximal_sequence"


def test_pair_ap_rejects_equal_ends():
    _, ctx = cycle_with_chords(4, [])
    with pytest.raises(ValueError):
        cd.decompose_pair_ap(ctx, 0, 0)


def test_records_only_inside_block():
    _, ctx = cycle_with_chords(5, [])
    with cd.record_constructions() as log:
        cd.decompose_all_a2(ctx)
    cd.decompose_all_a2(ctx)
    assert len(log) == 1
