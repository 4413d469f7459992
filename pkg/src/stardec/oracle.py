"""Exhaustive searches used as ground truth: 3-decompositions and Hamiltonicity."""

from __future__ import annotations

from typing import Iterable, Optional

from .graph_core import CyclePath, Graph, GraphError, ThreeDecomposition, delete_vertices, is_cubic
from .matching_star import BudgetExceeded

TREE, CYCLE, MATCHING = 0, 1, 2

# admissible (tree, cycle, matching) degree triples at a fully labelled cubic vertex
_ALLOWED = {(3, 0, 0), (2, 0, 1), (1, 2, 0)}


class _RollbackForest:
    """Union-find without path compression so unions can be undone."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: list[Optional[tuple[int, int]]] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, u: int, v: int) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self.size[ru] > self.size[rv]:
            ru, rv = rv, ru
        self.parent[ru] = rv
        self.size[rv] += self.size[ru]
        self.history.append((ru, rv))
        return True

    def undo(self) -> None:
        ru, rv = self.history.pop()
        self.parent[ru] = ru
        self.size[rv] -= self.size[ru]


def brute_force_three_decomposition(g: Graph, budget: Optional[int] = 5_000_000) -> Optional[ThreeDecomposition]:
    """First labelling (edges in canonical order, tree < cycle < matching) that is a 3-decomposition.

    Returns ``None`` when the search space is exhausted without a solution.
    ``budget`` caps the number of search nodes; exceeding it raises
    :class:`BudgetExceeded`.
    """
    if not is_cubic(g):
        raise GraphError("brute-force search expects a cubic graph")
    n, m = g.n, g.m
    if n == 0:
        return ThreeDecomposition((), (), ())
    # index of the last edge at each vertex: after it the vertex is fully labelled
    last_at = [max(g.incident(v)) for v in range(n)]
    closes: list[list[int]] = [[] for _ in range(m)]
    for v in range(n):
        closes[last_at[v]].append(v)
    deg = [[0, 0, 0] for _ in range(n)]
    labels = [0] * m
    forest = _RollbackForest(n)
    counts = [0, 0, 0]
    visited = 0

    def rec(i: int) -> bool:
        nonlocal visited
        visited += 1
        if budget is not None and visited > budget:
            raise BudgetExceeded(f"no decision after {budget} search nodes")
        if counts[TREE] + (m - i) < n - 1:
            return False
        if i == m:
            return counts[TREE] == n - 1
        u, v = g.edges[i]
        for lab in (TREE, CYCLE, MATCHING):
            if lab == MATCHING and (deg[u][MATCHING] or deg[v][MATCHING]):
                continue
            if lab == CYCLE and (deg[u][CYCLE] == 2 or deg[v][CYCLE] == 2):
                continue
            if lab == TREE and counts[TREE] == n - 1:
                continue
            joined = False
            if lab == TREE:
                if not forest.union(u, v):
                    continue
                joined = True
            deg[u][lab] += 1
            deg[v][lab] += 1
            counts[lab] += 1
            labels[i] = lab
            if all(tuple(deg[w]) in _ALLOWED for w in closes[i]) and rec(i + 1):
                return True
            deg[u][lab] -= 1
            deg[v][lab] -= 1
            counts[lab] -= 1
            if joined:
                forest.undo()
        return False

    if not rec(0):
        return None
    part = [[], [], []]
    for e, lab in enumerate(labels):
        part[lab].append(e)
    return ThreeDecomposition(tuple(part[TREE]), tuple(part[CYCLE]), tuple(part[MATCHING]))


def _extend_path(g: Graph, path: list[int], on_path: list[bool], accept, target_len: int) -> bool:
    """Depth-first extension of ``path`` at its last vertex until ``accept`` holds."""
    if len(path) == target_len:
        return accept(path)
    tail = path[-1]
    for w in g.adjacency[tail]:
        if on_path[w]:
            continue
        on_path[w] = True
        path.append(w)
        if _feasible(g, path, on_path, target_len) and _extend_path(g, path, on_path, accept, target_len):
            return True
        path.pop()
        on_path[w] = False
    return False


def _feasible(g: Graph, path: list[int], on_path: list[bool], target_len: int) -> bool:
    """Cheap necessary conditions: remaining vertices reachable and not stranded."""
    if len(path) == target_len:
        return True
    tail = path[-1]
    dead_ends = 0
    start = None
    for v in range(g.n):
        if on_path[v]:
            continue
        start = v
        free = sum(1 for w in g.adjacency[v] if not on_path[w] or w == tail)
        if free == 0:
            return False
        if free == 1:
            dead_ends += 1
            if dead_ends > 1:
                return False
    # the unvisited vertices together with the tail must be connected
    seen = {tail}
    stack = [tail]
    while stack:
        a = stack.pop()
        for w in g.adjacency[a]:
            if not on_path[w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) - 1 == target_len - len(path) or start is None


def hamiltonian_cycle(g: Graph) -> Optional[CyclePath]:
    """A Hamiltonian cycle through vertex 0, or ``None`` after exhaustive search."""
    n = g.n
    if n < 3:
        return None
    on_path = [False] * n
    on_path[0] = True
    path = [0]

    def closes(p: list[int]) -> bool:
        # each cycle is found twice; keep the orientation with the smaller second vertex
        return g.has_edge(p[-1], 0) and p[1] < p[-1]

    if _extend_path(g, path, on_path, closes, n):
        return CyclePath(tuple(path))
    return None


def hamiltonian_path(
    g: Graph, ends: Optional[tuple[Iterable[int], Iterable[int]]] = None
) -> Optional[CyclePath]:
    """A Hamiltonian path, optionally with one end in ``ends[0]`` and the other in ``ends[1]``."""
    n = g.n
    if n == 0:
        return None
    if ends is None:
        first, second = set(range(n)), set(range(n))
    else:
        first, second = set(ends[0]), set(ends[1])
    if n == 1:
        return CyclePath((0,), closed=False) if 0 in first and 0 in second else None
    # a path read backwards is also a path, so start from either set
    for s in sorted(first | second):
        want = second if s in first else first
        if s in first and s in second:
            want = first | second

        def accept(p: list[int], want=want) -> bool:
            return p[-1] in want

        on_path = [False] * n
        on_path[s] = True
        path = [s]
        if _extend_path(g, path, on_path, accept, n):
            return CyclePath(tuple(path), closed=False)
    return None


def is_hypohamiltonian(g: Graph) -> bool:
    if hamiltonian_cycle(g) is not None:
        return False
    for v in range(g.n):
        sub, _ = delete_vertices(g, [v])
        if hamiltonian_cycle(sub) is None:
            return False
    return True
