"""Perfect matchings, cycle covers and star-shaped contraction graphs."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph_core import (
    CyclePath,
    Graph,
    GraphError,
    cycle_components,
    edge_set,
    subgraph_from_edges,
)

log = logging.getLogger(__name__)


class BudgetExceeded(Exception):
    """A bounded search stopped before reaching a definite answer."""


@dataclass(frozen=True)
class CycleCover:
    """A perfect matching together with the cycles of ``G - M``.

    ``centre`` indexes ``cycles``; it only carries meaning for star covers.
    """

    matching: tuple[int, ...]
    cycles: tuple[CyclePath, ...]
    centre: int = 0

    def cycle_of(self) -> dict[int, int]:
        """Map each vertex to the index of the cycle containing it."""
        return {v: i for i, c in enumerate(self.cycles) for v in c.vertices}

    def partner(self, g: Graph) -> dict[int, int]:
        out = {}
        for e in self.matching:
            u, v = g.edges[e]
            out[u] = v
            out[v] = u
        return out

    @property
    def tips(self) -> list[int]:
        return [i for i in range(len(self.cycles)) if i != self.centre]


@dataclass(frozen=True)
class ContractionGraph:
    nodes: int
    edges: frozenset[tuple[int, int]]

    def neighbors(self, i: int) -> set[int]:
        return {b if a == i else a for a, b in self.edges if i in (a, b)}


def enumerate_perfect_matchings(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every perfect matching of ``g`` once, as sorted edge-index tuples.

    Backtracks on the lowest unmatched vertex, trying its neighbours in
    ascending order.
    """
    if g.n % 2:
        log.debug("graph of odd order %d has no perfect matching", g.n)
        return
    mate = [-1] * g.n
    chosen: list[int] = []

    def rec(lowest: int) -> Iterator[tuple[int, ...]]:
        v = lowest
        while v < g.n and mate[v] != -1:
            v += 1
        if v == g.n:
            yield edge_set(chosen)
            return
        for w in g.adjacency[v]:
            if mate[w] != -1:
                continue
            mate[v], mate[w] = w, v
            chosen.append(g.edge_id(v, w))
            yield from rec(v + 1)
            chosen.pop()
            mate[v] = mate[w] = -1

    yield from rec(0)


def is_perfect_matching(g: Graph, matching) -> bool:
    covered = [0] * g.n
    for e in matching:
        u, v = g.edges[e]
        covered[u] += 1
        covered[v] += 1
    return all(c == 1 for c in covered)


def cover_from_matching(g: Graph, matching, centre: int = 0) -> CycleCover:
    """The cycles of ``g - matching``; ``g`` must be cubic."""
    rest = set(range(g.m)) - set(matching)
    cycles = cycle_components(subgraph_from_edges(g, rest))
    return CycleCover(edge_set(matching), tuple(cycles), centre)


def contraction_graph(g: Graph, cover: CycleCover) -> ContractionGraph:
    where = cover.cycle_of()
    pairs = set()
    for e in cover.matching:
        u, v = g.edges[e]
        a, b = where[u], where[v]
        if a != b:
            pairs.add((min(a, b), max(a, b)))
    return ContractionGraph(len(cover.cycles), frozenset(pairs))


def is_star(cg: ContractionGraph, designated_centre: Optional[int] = None) -> Optional[int]:
    """Return a star centre of ``cg`` or ``None``.

    A star is a tree of diameter at most 2.  On two nodes either endpoint
    qualifies and the smaller is returned unless ``designated_centre`` picks
    the other one.
    """
    n = cg.nodes
    if n == 0 or len(cg.edges) != n - 1:
        return None
    candidates = range(n) if designated_centre is None else [designated_centre]
    for c in candidates:
        if not 0 <= c < n:
            return None
        if all(c in e for e in cg.edges):
            return c
    return None


def validate_cover(g: Graph, cover: CycleCover) -> None:
    """Raise :class:`GraphError` unless ``cover`` is a star cover of ``g``."""
    if not is_perfect_matching(g, cover.matching):
        raise GraphError("cover matching is not a perfect matching")
    expected = cover_from_matching(g, cover.matching).cycles
    if sorted(frozenset(c.vertices) for c in expected) != sorted(
        frozenset(c.vertices) for c in cover.cycles
    ):
        raise GraphError("cover cycles differ from the cycles of G - M")
    for c in cover.cycles:
        for u, v in c.pairs():
            if not g.has_edge(u, v) or g.edge_id(u, v) in set(cover.matching):
                raise GraphError(f"cover cycle uses non-cycle edge ({u}, {v})")
    if is_star(contraction_graph(g, cover), cover.centre) is None:
        raise GraphError("contraction graph is not a star around the given centre")


def find_star_matching(g: Graph, budget: Optional[int] = None) -> Optional[CycleCover]:
    """First perfect matching (in enumeration order) whose contraction is a star.

    Returns ``None`` when no such matching exists.  ``budget`` bounds the
    number of matchings examined; running out raises :class:`BudgetExceeded`.
    """
    for count, matching in enumerate(enumerate_perfect_matchings(g)):
        if budget is not None and count >= budget:
            raise BudgetExceeded(f"no star matching among the first {budget} matchings")
        cover = cover_from_matching(g, matching)
        centre = is_star(contraction_graph(g, cover))
        if centre is not None:
            return CycleCover(cover.matching, cover.cycles, centre)
    return None


def contraction_diameter(cg: ContractionGraph) -> Optional[int]:
    """Diameter by BFS from every node; ``None`` if disconnected."""
    adj = {i: cg.neighbors(i) for i in range(cg.nodes)}
    best = 0
    for s in range(cg.nodes):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) != cg.nodes:
            return None
        best = max(best, max(dist.values()))
    return best
