"""Per-cycle partial decompositions.

Given a cycle ``C`` of ``G - M`` and a split of its boundary into four
classes ``(a0, ap, am, a2)``, the functions here build a forest / cycle part
/ matching partition of ``G[V(C)]`` that the assembly step can glue onto an
already decomposed part of the graph.  Four boundary shapes are supported:

* one vertex in ``am``, the rest in ``a2`` (:func:`decompose_single_am`)
* everything in ``a2`` (:func:`decompose_all_a2`)
* one vertex in ``a0``, the rest in ``a2`` (:func:`decompose_single_a0`)
* two vertices in ``ap``, the rest in ``a2`` (:func:`decompose_pair_ap`)

All vertex ids are host-graph ids; edge sets are canonical host edge indices.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .graph_core import (
    CyclePath,
    Graph,
    edge_set,
    induced_edges,
    induced_subgraph,
    vertex_set,
)


class InvariantViolation(RuntimeError):
    """A structural fact the construction relies on did not hold."""


@dataclass(frozen=True)
class TipContext:
    host: Graph
    cycle: CyclePath
    gi: Graph = field(repr=False)
    relabel: dict[int, int] = field(repr=False, compare=False, hash=False)
    chords: tuple[int, ...]
    boundary: tuple[int, ...]

    @property
    def scope(self) -> tuple[int, ...]:
        return vertex_set(self.cycle.vertices)

    @property
    def cycle_edges(self) -> tuple[int, ...]:
        return self.cycle.edge_ids(self.host)

    @property
    def all_edges(self) -> tuple[int, ...]:
        return edge_set(self.cycle_edges + self.chords)


@dataclass(frozen=True)
class BoundaryClassification:
    a0: tuple[int, ...] = ()
    ap: tuple[int, ...] = ()
    am: tuple[int, ...] = ()
    a2: tuple[int, ...] = ()

    def class_of(self, v: int) -> Optional[str]:
        for name in ("a0", "ap", "am", "a2"):
            if v in getattr(self, name):
                return name
        return None


@dataclass(frozen=True)
class PartialDecomposition:
    scope: tuple[int, ...]
    tree_edges: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    matching_edges: tuple[int, ...]


@dataclass(frozen=True)
class ConstructionRecord:
    """One call of a per-cycle construction, captured by :func:`record_constructions`."""

    kind: str
    ctx: TipContext
    classification: BoundaryClassification
    result: PartialDecomposition
    case: str
    checks: tuple[str, ...] = ()


_recorder: contextvars.ContextVar[Optional[list]] = contextvars.ContextVar(
    "stardec_construction_recorder", default=None
)


@contextmanager
def record_constructions() -> Iterator[list[ConstructionRecord]]:
    """Collect a :class:`ConstructionRecord` for every construction run inside the block."""
    log: list[ConstructionRecord] = []
    token = _recorder.set(log)
    try:
        yield log
    finally:
        _recorder.reset(token)


def _emit(kind, ctx, cls, result, case, checks=()):
    log = _recorder.get()
    if log is not None:
        log.append(ConstructionRecord(kind, ctx, cls, result, case, tuple(checks)))
    return result


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise InvariantViolation(what)


def make_tip_context(host: Graph, cycle: CyclePath) -> TipContext:
    """Context for a cycle of ``host - M``: its induced subgraph, chords and boundary."""
    verts = cycle.vertices
    own = set(cycle.edge_ids(host))
    chords = tuple(e for e in induced_edges(host, verts) if e not in own)
    touched = [v for e in chords for v in host.edges[e]]
    if len(touched) != len(set(touched)):
        raise ValueError("chords of the cycle share a vertex")
    gi, relabel = induced_subgraph(host, verts)
    bnd = vertex_set(set(verts) - set(touched))
    return TipContext(host, cycle, gi, relabel, chords, bnd)


def classification(ctx: TipContext, a0=(), ap=(), am=()) -> BoundaryClassification:
    """Put every boundary vertex not named in ``a0``/``ap``/``am`` into ``a2``."""
    named = set(a0) | set(ap) | set(am)
    return BoundaryClassification(
        vertex_set(a0), vertex_set(ap), vertex_set(am),
        tuple(v for v in ctx.boundary if v not in named),
    )


# ---------------------------------------------------------------------------
# cycle geometry helpers


def _positions(ctx: TipContext) -> dict[int, int]:
    return {v: i for i, v in enumerate(ctx.cycle.vertices)}


def _forward(ctx: TipContext, a: int, b: int) -> list[int]:
    """Vertices from ``a`` to ``b`` following the cycle's stored orientation."""
    order = ctx.cycle.vertices
    pos = _positions(ctx)
    i, j, n = pos[a], pos[b], len(order)
    steps = (j - i) % n
    return [order[(i + t) % n] for t in range(steps + 1)]


def _partner(ctx: TipContext) -> dict[int, int]:
    out = {}
    for e in ctx.chords:
        u, v = ctx.host.edges[e]
        out[u], out[v] = v, u
    return out


def _path_edges(g: Graph, verts) -> list[int]:
    return [g.edge_id(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]


def _chord_arcs(ctx: TipContext) -> Iterator[tuple[int, list[int]]]:
    """Each chord with its two arcs, chords in canonical order."""
    pos = _positions(ctx)
    for e in ctx.chords:
        u, v = ctx.host.edges[e]
        if pos[u] > pos[v]:
            u, v = v, u
        yield e, _forward(ctx, u, v)
        yield e, _forward(ctx, v, u)


def _is_chordless(ctx: TipContext, arc: list[int]) -> bool:
    inside = set(arc)
    partner = _partner(ctx)
    ends = {arc[0], arc[-1]}
    for v in arc:
        w = partner.get(v)
        if w is not None and w in inside and not ({v, w} == ends):
            return False
    return True


def _shrink(ctx: TipContext, arc: list[int]) -> list[int]:
    """Sub-arc spanned by the chord of minimal arc distance inside ``arc``."""
    partner = _partner(ctx)
    where = {v: i for i, v in enumerate(arc)}
    best = None
    for i, v in enumerate(arc):
        w = partner.get(v)
        if w is None or w not in where or where[w] < i:
            continue
        key = (where[w] - i, i)
        if best is None or key < best:
            best = key
    span, start = best
    return arc[start:start + span + 1]


def find_minimal_cycle(ctx: TipContext, avoid: Optional[int] = None) -> Optional[CyclePath]:
    """A chordless cycle made of one chord and one arc of the cycle.

    The returned path lists the arc; its last and first vertices are joined
    by the chord.  For every chord (canonical order) and each of its two arcs
    the arc is shrunk to the chord of minimal distance inside it, and the
    first result not containing ``avoid`` is returned.
    """
    for _, arc in _chord_arcs(ctx):
        small = _shrink(ctx, arc)
        if avoid is None or avoid not in small:
            return CyclePath(tuple(small), closed=True)
    return None


def minimal_cycles(ctx: TipContext) -> Iterator[CyclePath]:
    """Every (chord, arc) pair whose cycle is chordless, in canonical order."""
    for _, arc in _chord_arcs(ctx):
        if _is_chordless(ctx, arc):
            yield CyclePath(tuple(arc), closed=True)


def _check_minimal(ctx: TipContext, c: CyclePath) -> None:
    arc = list(c.vertices)
    partner = _partner(ctx)
    if len(arc) < 3 or partner.get(arc[0]) != arc[-1]:
        raise ValueError("cycle is not closed by a chord")
    if arc != _forward(ctx, arc[0], arc[-1]):
        raise ValueError("cycle does not follow an arc of the host cycle")
    if not _is_chordless(ctx, arc):
        raise ValueError("cycle has a chord, so it is not minimal")


def decomposition_given_by(
    ctx: TipContext,
    c: CyclePath,
    required_interior: Optional[int] = None,
    a2: Optional[Iterable[int]] = None,
) -> PartialDecomposition:
    """Cycle part ``E(c)``, tree = rest of the host cycle with stragglers re-attached.

    ``required_interior`` must stay off ``c``.  When ``a2`` is given, every
    boundary vertex on ``c`` must belong to it.
    """
    _check_minimal(ctx, c)
    on_c = set(c.vertices)
    if required_interior is not None and required_interior in on_c:
        raise ValueError(f"vertex {required_interior} lies on the minimal cycle")
    if a2 is not None:
        allowed = set(a2)
        bad = [v for v in ctx.boundary if v in on_c and v not in allowed]
        if bad:
            raise ValueError(f"boundary vertices {bad} on the cycle are not in a2")
    host = ctx.host
    cycle_part = set(c.edge_ids(host))
    tree = set(ctx.cycle_edges) - cycle_part
    in_path = {v for e in tree for v in host.edges[e]}
    partner = _partner(ctx)
    for v in c.vertices[1:-1]:
        w = partner.get(v)
        if w is None:
            continue
        _require(w in in_path, f"chord partner {w} of {v} is off the leftover path")
        tree.add(host.edge_id(v, w))
    matching = set(ctx.chords) - tree - cycle_part
    return PartialDecomposition(ctx.scope, edge_set(tree), edge_set(cycle_part), edge_set(matching))


# ---------------------------------------------------------------------------
# the four supported boundary shapes


def decompose_single_am(ctx: TipContext, x: int) -> PartialDecomposition:
    """Decomposition with ``am = {x}`` and every other boundary vertex in ``a2``."""
    if x not in ctx.boundary:
        raise ValueError(f"{x} is not a boundary vertex of the cycle")
    cls = classification(ctx, am=[x])
    return _emit("single_am", ctx, cls, *_single_am(ctx, x))


def _single_am(ctx: TipContext, x: int):
    if not ctx.chords:
        return PartialDecomposition(ctx.scope, (), ctx.cycle_edges, ()), "chordless"
    c = find_minimal_cycle(ctx, avoid=x)
    _require(c is not None, "no minimal cycle avoids a boundary vertex")
    a2 = [v for v in ctx.boundary if v != x]
    return decomposition_given_by(ctx, c, required_interior=x, a2=a2), "minimal_cycle"


def decompose_all_a2(ctx: TipContext) -> PartialDecomposition:
    """Decomposition with the whole boundary in ``a2``."""
    if not ctx.boundary:
        raise ValueError("cycle has an empty boundary")
    result, case = _single_am(ctx, ctx.boundary[0])
    return _emit("all_a2", ctx, classification(ctx), result, case)


def decompose_single_a0(ctx: TipContext, x: int) -> PartialDecomposition:
    """Decomposition with ``a0 = {x}`` and every other boundary vertex in ``a2``."""
    if x not in ctx.boundary:
        raise ValueError(f"{x} is not a boundary vertex of the cycle")
    a2 = [v for v in ctx.boundary if v != x]
    if not a2:
        raise ValueError("a2 would be empty")
    cls = classification(ctx, a0=[x])
    host = ctx.host

    if not ctx.chords:
        order = ctx.cycle.vertices
        i = order.index(x)
        y = min(order[i - 1], order[(i + 1) % len(order)])
        xy = host.edge_id(x, y)
        tree = tuple(e for e in ctx.cycle_edges if e != xy)
        result = PartialDecomposition(ctx.scope, tree, (), (xy,))
        return _emit("single_a0", ctx, cls, result, "chordless")

    for c in minimal_cycles(ctx):
        missed = [v for v in a2 if v not in c.vertices]
        if x not in c.vertices and missed:
            result = decomposition_given_by(ctx, c, required_interior=min(missed), a2=a2)
            return _emit("single_a0", ctx, cls, result, "minimal_cycle")

    result, case, checks = _single_a0_structured(ctx, x, set(a2))
    return _emit("single_a0", ctx, cls, result, case, checks)


def _single_a0_structured(ctx: TipContext, x: int, a2: set[int]):
    """The case where every minimal cycle hits ``x`` or swallows all of ``a2``.

    Then ``a2`` is a subpath ``P`` and the two ``x``-to-``P`` paths carry the
    chords between them.  A long chord gives a 4+-cycle with two chords;
    otherwise all chords are short and a Hamiltonian path is built.
    """
    host = ctx.host
    order = ctx.cycle.vertices
    n = len(order)
    i = order.index(x)
    after = [order[(i + t) % n] for t in range(1, n)]
    marks = [k for k, v in enumerate(after) if v in a2]
    first, last = marks[0], marks[-1]
    _require(marks == list(range(first, last + 1)), "a2 does not span a subpath")
    xs = after[:first]
    ys = after[last + 1:][::-1]
    path_p = after[first:last + 1]
    checks = []
    _require(len(xs) == len(ys), "the two x-to-P paths differ in length")
    checks.append("equal_length")

    partner = _partner(ctx)
    xi = {v: k + 1 for k, v in enumerate(xs)}
    yi = {v: k + 1 for k, v in enumerate(ys)}
    for v in xs + ys:
        _require(v in partner, f"inner vertex {v} has no chord")
    for e in ctx.chords:
        u, v = host.edges[e]
        _require(
            (u in xi and v in yi) or (u in yi and v in xi),
            f"chord {u}{v} does not join the two x-to-P paths",
        )

    def ends(e):
        u, v = host.edges[e]
        return (xi[u], yi[v]) if u in xi else (xi[v], yi[u])

    long_chords = [e for e in ctx.chords if abs(ends(e)[0] - ends(e)[1]) >= 2]
    if long_chords:
        e_long = min(long_chords, key=lambda e: (min(ends(e)), e))
        k, l = ends(e_long)
        if l < k:
            xs, ys = ys, xs
            k, l = l, k
        return _long_chord_case(ctx, xs, ys, k, e_long) + (checks + ["z_on_first_path"],)

    for e in ctx.chords:
        k, l = ends(e)
        if k != l:
            _require(
                host.has_edge(xs[l - 1], ys[k - 1]),
                f"short chord x{k}y{l} lacks its partner x{l}y{k}",
            )
    checks.append("short_chord_pairing")
    result = _short_chord_case(ctx, x, xs, ys, path_p)
    checks.append("hamiltonian_q")
    return result, "short_chords", checks


def _long_chord_case(ctx, xs, ys, k, e_long):
    host = ctx.host
    partner = _partner(ctx)
    y_k, y_k1 = ys[k - 1], ys[k]
    z_k, z_k1 = partner[y_k], partner[y_k1]
    later = set(xs[k:])
    _require(z_k in later and z_k1 in later, "partners of y_k, y_k+1 are not beyond x_k")
    a, b = xs.index(z_k1), xs.index(z_k)
    step = 1 if a <= b else -1
    segment = [xs[t] for t in range(a, b + step, step)]
    cyc = [y_k, y_k1] + segment
    cycle_part = set(_path_edges(host, cyc)) | {host.edge_id(cyc[-1], cyc[0])}

    tree = (set(ctx.cycle_edges) - cycle_part) | {e_long}
    covered = {v for e in tree for v in host.edges[e]}
    on_c = set(cyc)
    for v in segment[1:-1]:
        w = partner[v]
        _require(w not in on_c and w in covered, f"isolated vertex {v} cannot re-attach")
        tree.add(host.edge_id(v, w))
    _require(len(tree) == len(ctx.cycle.vertices) - 1, "long-chord tree is not spanning")
    matching = set(ctx.chords) - tree - cycle_part
    result = PartialDecomposition(ctx.scope, edge_set(tree), edge_set(cycle_part), edge_set(matching))
    return result, "long_chord"


def _short_chord_case(ctx, x, xs, ys, path_p):
    host = ctx.host
    r = len(xs)
    v_p = min(path_p[0], path_p[-1])
    # suppressed graph: the two synthetic v_P edges stand for x_r-P[0] and y_r-P[-1]
    ham = [x] + xs + [v_p] + ys[::-1]
    original = {}
    for t in range(len(ham)):
        a, b = ham[t], ham[(t + 1) % len(ham)]
        if a == v_p:
            original[t] = host.edge_id(path_p[-1], b)
        elif b == v_p:
            original[t] = host.edge_id(a, path_p[0])
        else:
            original[t] = host.edge_id(a, b)
    m1 = {t for t in range(len(ham)) if t % 2 == 0}
    q_pairs = [(ham[t], ham[(t + 1) % len(ham)]) for t in range(len(ham)) if t not in m1]
    q_pairs += [host.edges[e] for e in ctx.chords]

    deg = {v: 0 for v in ham}
    adj: dict[int, list[int]] = {v: [] for v in ham}
    for a, b in q_pairs:
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    _require(len(q_pairs) == len(ham) - 1, "Q has the wrong number of edges")
    _require(deg[x] == 1 and deg[v_p] == 1, "Q does not end at x and v_P")
    _require(all(deg[v] == 2 for v in ham if v not in (x, v_p)), "Q has a vertex of degree != 2")
    seen, stack = {x}, [x]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    _require(len(seen) == 2 * r + 2, "Q is not a single Hamiltonian path")

    tree = {original[t] for t in range(len(ham)) if t not in m1}
    tree |= set(ctx.chords)
    tree |= set(_path_edges(host, path_p))
    matching = {original[t] for t in m1}
    return PartialDecomposition(ctx.scope, edge_set(tree), (), edge_set(matching))


def decompose_pair_ap(ctx: TipContext, x: int, y: int) -> PartialDecomposition:
    """Decomposition with ``ap = {x, y}`` and every other boundary vertex in ``a2``.

    The cycle part is one ``x``-``y`` path.  It runs along the arc ``P``
    that is not kept for the tree, jumping over a maximal sequence of
    pairwise disjoint chord spans whose interiors go to the tree instead.
    """
    if x == y:
        raise ValueError("x and y must differ")
    for v in (x, y):
        if v not in ctx.boundary:
            raise ValueError(f"{v} is not a boundary vertex of the cycle")
    a2 = set(ctx.boundary) - {x, y}
    if not a2:
        raise ValueError("a2 would be empty")
    host = ctx.host
    partner = _partner(ctx)
    cls = classification(ctx, ap=[x, y])

    arcs = [_forward(ctx, x, y), _forward(ctx, y, x)[::-1]]
    usable = [arc for arc in arcs if a2 & set(arc)]
    keep = min(usable, key=lambda arc: (len(arc), min(a2 & set(arc))))
    path = arcs[1] if keep is arcs[0] else arcs[0]
    where = {v: t for t, v in enumerate(path)}

    spans = []
    for e in ctx.chords:
        u, v = host.edges[e]
        if u in where and v in where:
            a, b = sorted((where[u], where[v]))
            spans.append((a, b, e))

    used = [False] * len(path)
    reach = set(keep)
    chosen: list[tuple[int, int, int, Optional[int]]] = []

    def free(a, b):
        return not any(used[a:b + 1])

    def link(a, b):
        links = [
            host.edge_id(path[t], partner[path[t]])
            for t in range(a, b + 1)
            if path[t] in partner and partner[path[t]] in reach
        ]
        return min(links) if links else None

    def qualifies(a, b):
        return any(path[t] in a2 for t in range(a, b + 1)) or link(a, b) is not None

    while True:
        open_spans = [s for s in spans if free(s[0], s[1])]
        widest = [
            s for s in open_spans
            if not any(o[0] < s[0] and s[1] < o[1] for o in open_spans)
        ]
        pick = next((s for s in sorted(widest) if qualifies(s[0], s[1])), None)
        if pick is None:
            break
        a, b, e = pick
        has_a2 = any(path[t] in a2 for t in range(a, b + 1))
        chosen.append((a, b, e, None if has_a2 else link(a, b)))
        for t in range(a, b + 1):
            used[t] = True
        reach.update(path[a:b + 1])

    for a, b, e in spans:
        if not free(a, b) or not qualifies(a, b):
            continue
        dominated = any(
            a2_ <= a and b <= b2_ and (a2_, b2_) != (a, b) and free(a2_, b2_)
            for a2_, b2_, _ in spans
        )
        _require(dominated, f"chord span {a}-{b} could still extend the sequence")

    chosen.sort()
    cuts = [0]
    for a, b, _, _ in chosen:
        cuts += [a, b]
    cuts.append(len(path) - 1)
    q_edges = set()
    inner_q = set()
    for j in range(0, len(cuts), 2):
        lo, hi = cuts[j], cuts[j + 1]
        q_edges.update(_path_edges(host, path[lo:hi + 1]))
        inner_q.update(path[lo + 1:hi])
    q_edges.update(e for _, _, e, _ in chosen)

    forest = set(_path_edges(host, keep))
    in_forest = set(keep)
    for a, b, _, link_edge in chosen:
        forest.update(_path_edges(host, path[a:b + 1]))
        in_forest.update(path[a:b + 1])
        if link_edge is not None:
            forest.add(link_edge)
    for v in sorted(inner_q):
        w = partner.get(v)
        if w is not None and w in in_forest:
            forest.add(host.edge_id(v, w))

    matching = set(ctx.all_edges) - forest - q_edges
    _require(matching <= set(ctx.chords), "a cycle edge was left unassigned")
    result = PartialDecomposition(ctx.scope, edge_set(forest), edge_set(q_edges), edge_set(matching))
    return _emit("pair_ap", ctx, cls, result, "maximal_sequence", ["sequence_maximal"])
