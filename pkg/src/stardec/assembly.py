"""Glue per-cycle decompositions into a 3-decomposition of a star-like graph.

The centre cycle is decomposed first so that every tip sees one of the four
supported boundary shapes; tips are then absorbed one at a time.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from . import cycle_decomp as cd
from .generators import vertex_connectivity_at_least
from .graph_core import (
    Graph,
    GraphError,
    ThreeDecomposition,
    edge_set,
    is_cubic,
    vertex_set,
)
from .matching_star import CycleCover, find_star_matching, validate_cover
from .verify import verify_a_decomposition, verify_i_decomposition

log = logging.getLogger(__name__)


class NotApplicable(ValueError):
    """The input lies outside the class of graphs the construction handles."""


class NotCubic(NotApplicable):
    pass


class NotStarLike(NotApplicable):
    pass


class NotThreeConnected(NotApplicable):
    pass


@dataclass(frozen=True)
class IDecompositionState:
    graph: Graph
    cover: CycleCover
    absorbed: frozenset[int]
    partial: cd.PartialDecomposition

    @property
    def scope(self) -> set[int]:
        return {v for i in self.absorbed for v in self.cover.cycles[i].vertices}


def _tip_neighbours(g: Graph, cover: CycleCover) -> dict[int, int]:
    """Centre vertex -> index of the tip its matching edge leads to."""
    where = cover.cycle_of()
    partner = cover.partner(g)
    out = {}
    for v in cover.cycles[cover.centre].vertices:
        t = where[partner[v]]
        if t != cover.centre:
            out[v] = t
    return out


def _degree_map(g: Graph, edges) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in edges:
        for v in g.edges[e]:
            deg[v] = deg.get(v, 0) + 1
    return deg


def good_centre_decomposition(g: Graph, cover: CycleCover) -> IDecompositionState:
    """Decompose the centre so each tip sees at most one special boundary class."""
    if len(cover.cycles) < 2:
        raise ValueError("a single-cycle cover has no tips")
    validate_cover(g, cover)
    ctx = cd.make_tip_context(g, cover.cycles[cover.centre])
    tip_of = _tip_neighbours(g, cover)
    start = frozenset([cover.centre])

    if ctx.chords:
        for c in cd.minimal_cycles(ctx):
            tips_on_c = [tip_of[v] for v in c.vertices if v in tip_of]
            if len(tips_on_c) == len(set(tips_on_c)):
                return IDecompositionState(g, cover, start, cd.decomposition_given_by(ctx, c))
        c = cd.find_minimal_cycle(ctx)
        return IDecompositionState(g, cover, start, _centre_with_path(g, ctx, c, tip_of))

    uv = min(ctx.cycle_edges)
    u, v = g.edges[uv]
    rest = tuple(e for e in ctx.cycle_edges if e != uv)
    if tip_of[u] == tip_of[v]:
        partial = cd.PartialDecomposition(ctx.scope, rest, (uv,), ())
    else:
        partial = cd.PartialDecomposition(ctx.scope, rest, (), (uv,))
    return IDecompositionState(g, cover, start, partial)


def _centre_with_path(g: Graph, ctx: cd.TipContext, c, tip_of) -> cd.PartialDecomposition:
    """Cycle part = subpath of ``c`` between the two nearest same-tip vertices."""
    arc = list(c.vertices)
    best = None
    last_seen: dict[int, int] = {}
    for i, v in enumerate(arc):
        t = tip_of.get(v)
        if t is None:
            continue
        if t in last_seen:
            key = (i - last_seen[t], last_seen[t])
            if best is None or key < best:
                best = key
        last_seen[t] = i
    span, first = best
    sub = arc[first:first + span + 1]
    cycle_part = {g.edge_id(sub[i], sub[i + 1]) for i in range(span)}
    tree = set(ctx.cycle_edges) - cycle_part
    covered = {w for e in tree for w in g.edges[e]}
    partner = {}
    for e in ctx.chords:
        a, b = g.edges[e]
        partner[a], partner[b] = b, a
    for w in sub[1:-1]:
        p = partner.get(w)
        if p is None:
            continue
        if p not in covered:
            raise cd.InvariantViolation(f"centre vertex {w} cannot re-attach to the tree")
        tree.add(g.edge_id(w, p))
    matching = set(ctx.chords) - tree
    return cd.PartialDecomposition(ctx.scope, edge_set(tree), edge_set(cycle_part), edge_set(matching))


def classify_tip_boundary(state: IDecompositionState, tip: int) -> cd.BoundaryClassification:
    """Class of each tip boundary vertex, read off its neighbour in the absorbed part."""
    if tip in state.absorbed:
        raise ValueError(f"cycle {tip} is already absorbed")
    g = state.graph
    scope = state.scope
    tdeg = _degree_map(g, state.partial.tree_edges)
    cdeg = _degree_map(g, state.partial.cycle_edges)
    classes: dict[str, list[int]] = {"a0": [], "ap": [], "am": [], "a2": []}
    tip_vertices = set(state.cover.cycles[tip].vertices)
    for v in sorted(tip_vertices):
        outside = [w for w in g.adjacency[v] if w not in tip_vertices]
        if not outside:
            continue
        (u,) = outside
        if u not in scope:
            raise cd.InvariantViolation(f"tip vertex {v} is matched outside the absorbed part")
        if sum(1 for w in g.adjacency[u] if w in scope) != 2:
            raise cd.InvariantViolation(f"vertex {u} is not on the boundary of the absorbed part")
        if tdeg.get(u, 0) == 0:
            classes["a0"].append(v)
        elif tdeg[u] == 2:
            classes["a2"].append(v)
        elif cdeg.get(u, 0) == 1:
            classes["ap"].append(v)
        else:
            classes["am"].append(v)
    return cd.BoundaryClassification(*(vertex_set(classes[k]) for k in ("a0", "ap", "am", "a2")))


def extend(
    state: IDecompositionState, tip: int, tip_dec: cd.PartialDecomposition
) -> IDecompositionState:
    """Absorb ``tip`` by assigning the matching edges between it and the absorbed part."""
    g = state.graph
    cls = classify_tip_boundary(state, tip)
    ctx = cd.make_tip_context(g, state.cover.cycles[tip])
    report = verify_a_decomposition(ctx, cls, tip_dec)
    if not report.ok:
        raise ValueError(f"tip decomposition rejected:\n{report.summary()}")

    partner = state.cover.partner(g)
    cross = {v: g.edge_id(v, partner[v]) for v in ctx.boundary}
    tree, cycles, matching = set(), set(), set()
    for v in cls.ap:
        cycles.add(cross[v])
    for v in cls.am + cls.a0:
        tree.add(cross[v])

    fdeg = _degree_map(g, tip_dec.tree_edges)
    adj: dict[int, list[int]] = {v: [] for v in ctx.scope}
    for e in tip_dec.tree_edges:
        a, b = g.edges[e]
        adj[a].append(b)
        adj[b].append(a)
    a2, am = set(cls.a2), set(cls.am)
    seen: set[int] = set()
    for root in ctx.scope:
        if root in seen:
            continue
        comp, stack = [root], [root]
        seen.add(root)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        anchors = [v for v in comp if v in a2]
        if anchors and not any(v in am for v in comp):
            pick = min(anchors, key=lambda v: (fdeg.get(v, 0), v))
            tree.add(cross[pick])
    for v in cls.a2:
        if cross[v] not in tree:
            matching.add(cross[v])

    old = state.partial
    merged = cd.PartialDecomposition(
        vertex_set(set(old.scope) | set(ctx.scope)),
        edge_set(set(old.tree_edges) | set(tip_dec.tree_edges) | tree),
        edge_set(set(old.cycle_edges) | set(tip_dec.cycle_edges) | cycles),
        edge_set(set(old.matching_edges) | set(tip_dec.matching_edges) | matching),
    )
    return IDecompositionState(g, state.cover, state.absorbed | {tip}, merged)


def decompose_tip(state: IDecompositionState, tip: int) -> cd.PartialDecomposition:
    """Pick the per-cycle construction matching the tip's boundary classes."""
    cls = classify_tip_boundary(state, tip)
    ctx = cd.make_tip_context(state.graph, state.cover.cycles[tip])
    if len(cls.a0) == 1 and not (cls.ap or cls.am):
        return cd.decompose_single_a0(ctx, cls.a0[0])
    if len(cls.am) == 1 and not (cls.ap or cls.a0):
        return cd.decompose_single_am(ctx, cls.am[0])
    if len(cls.ap) == 2 and not (cls.a0 or cls.am):
        return cd.decompose_pair_ap(ctx, *cls.ap)
    if not (cls.a0 or cls.ap or cls.am):
        return cd.decompose_all_a2(ctx)
    raise cd.InvariantViolation(f"tip {tip} has an unsupported boundary shape {cls}")


def _single_cycle(g: Graph, cover: CycleCover) -> ThreeDecomposition:
    """Hamiltonian cover: every vertex carries a chord, so one minimal cycle suffices."""
    ctx = cd.make_tip_context(g, cover.cycles[0])
    c = cd.find_minimal_cycle(ctx)
    if c is None:
        raise cd.InvariantViolation("Hamiltonian cycle of a cubic graph without chords")
    part = cd.decomposition_given_by(ctx, c)
    return ThreeDecomposition(part.tree_edges, part.cycle_edges, part.matching_edges)


def check_applicable(g: Graph) -> None:
    if not is_cubic(g):
        raise NotCubic("graph is not cubic")
    if not vertex_connectivity_at_least(g, 3):
        raise NotThreeConnected("graph is not 3-connected")


def three_decompose(
    g: Graph,
    cover: Optional[CycleCover] = None,
    budget: Optional[int] = None,
    check_each_step: bool = True,
) -> ThreeDecomposition:
    """3-decomposition of a 3-connected star-like cubic graph.

    Without ``cover`` a star matching is searched for (``budget`` caps the
    number of matchings tried; see :func:`find_star_matching`).  A supplied
    cover is validated first.
    """
    check_applicable(g)
    if cover is None:
        cover = find_star_matching(g, budget=budget)
        if cover is None:
            raise NotStarLike("no perfect matching has a star contraction graph")
    else:
        try:
            validate_cover(g, cover)
        except GraphError as exc:
            raise NotStarLike(f"supplied cover rejected: {exc}") from exc

    if len(cover.cycles) == 1:
        return _single_cycle(g, cover)

    state = good_centre_decomposition(g, cover)
    for tip in cover.tips:
        state = extend(state, tip, decompose_tip(state, tip))
        if check_each_step:
            report = verify_i_decomposition(g, cover, state.absorbed, state.partial)
            if not report.ok:
                raise cd.InvariantViolation(
                    f"extension by tip {tip} broke the partial decomposition:\n{report.summary()}"
                )
    p = state.partial
    log.debug("decomposed %d cycles: tree %d, cycles %d, matching %d",
              len(cover.cycles), len(p.tree_edges), len(p.cycle_edges), len(p.matching_edges))
    return ThreeDecomposition(p.tree_edges, p.cycle_edges, p.matching_edges)
