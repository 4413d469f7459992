"""Immutable simple graphs on dense integer vertices.

Every other module works on :class:`Graph`.  Edges are stored once as
``(u, v)`` with ``u < v`` in a lexicographically sorted list; the position
of an edge in that list is its canonical index, and edge sets throughout
the package are sorted tuples of those indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input or a violated operation precondition."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    _index: dict[Edge, int] = field(repr=False, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        """Canonical index of edge ``uv``; raises ``KeyError`` if absent."""
        return self._index[(min(u, v), max(u, v))]

    def edge_ids(self, pairs: Iterable[Sequence[int]]) -> tuple[int, ...]:
        return edge_set(self.edge_id(u, v) for u, v in pairs)

    def incident(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.edge_id(v, w) for w in self.adjacency[v]))

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class CyclePath:
    """Ordered vertex sequence; ``closed`` marks a cycle rather than a path."""

    vertices: tuple[int, ...]
    closed: bool = True

    def __len__(self) -> int:
        return len(self.vertices)

    def pairs(self) -> list[Edge]:
        vs = self.vertices
        out = [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed and len(vs) > 2:
            out.append((vs[-1], vs[0]))
        return out

    def edge_ids(self, g: Graph) -> tuple[int, ...]:
        return g.edge_ids(self.pairs())


@dataclass(frozen=True)
class ThreeDecomposition:
    """Edge partition of a cubic graph into tree, 2-regular part and matching."""

    tree: tuple[int, ...]
    cycles: tuple[int, ...]
    matching: tuple[int, ...]


def vertex_set(vs: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(vs)))


def edge_set(es: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(es)))


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, dropping duplicate edges.

    Raises :class:`GraphError` on out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add((min(u, v), max(u, v)))
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    index = {e: i for i, e in enumerate(edges)}
    return Graph(n, adjacency, edges, index)


def is_cubic(g: Graph) -> bool:
    return all(len(a) == 3 for a in g.adjacency)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1`` in ascending order.

    Returns the subgraph and the map old id -> new id.
    """
    verts = vertex_set(s)
    relabel = {v: i for i, v in enumerate(verts)}
    pairs = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return build_graph(len(verts), pairs), relabel


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    gone = set(removed)
    return induced_subgraph(g, (v for v in g.vertices() if v not in gone))


def subgraph_from_edges(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """Spanning subgraph of ``g`` keeping only the given edges (same vertex ids)."""
    return build_graph(g.n, (g.edges[e] for e in edge_ids))


def induced_edges(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    """Canonical indices of the edges with both ends in ``s``."""
    members = set(s)
    return tuple(i for i, (u, v) in enumerate(g.edges) if u in members and v in members)


def boundary(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    """Vertices of ``s`` with degree exactly 2 in ``g[s]``."""
    members = set(s)
    return tuple(
        v for v in sorted(members)
        if sum(1 for w in g.adjacency[v] if w in members) == 2
    )


def cycle_components(g: Graph) -> list[CyclePath]:
    """Split a graph with all degrees in {0, 2} into its cycles.

    Isolated vertices are skipped.  Each cycle starts at its minimum vertex
    and continues towards the smaller of that vertex's two neighbours.
    Cycles are listed by their starting vertex.
    """
    for v in g.vertices():
        if g.degree(v) not in (0, 2):
            raise GraphError(f"vertex {v} has degree {g.degree(v)}; expected 0 or 2")
    seen = [False] * g.n
    cycles = []
    for start in g.vertices():
        if seen[start] or g.degree(start) == 0:
            continue
        order = [start]
        seen[start] = True
        prev, cur = start, g.adjacency[start][0]
        while cur != start:
            order.append(cur)
            seen[cur] = True
            a, b = g.adjacency[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(CyclePath(tuple(order), closed=True))
    return cycles
