"""Example graphs: Petersen, flower snarks, the hypohamiltonian gadget,
the K4 composition of three gadgets, and random star-like instances.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph_core import (
    CyclePath,
    Graph,
    GraphError,
    build_graph,
    delete_vertices,
    is_cubic,
)
from .matching_star import (
    CycleCover,
    contraction_graph,
    cover_from_matching,
    is_star,
    validate_cover,
)
from .oracle import hamiltonian_cycle


def petersen() -> Graph:
    """Outer cycle 0-4, spokes i-(i+5), inner pentagram 5-7-9-6-8."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return build_graph(10, outer + spokes + inner)


def flower_snark(k: int) -> Graph:
    """Flower snark J_k for odd ``k >= 5``.

    Vertex blocks: centres ``0..k-1``, then the ``x``, ``y`` and ``z``
    leaves.  The ``x`` leaves form a k-cycle; the ``y`` and ``z`` leaves
    form one 2k-cycle ``y0..y(k-1) z0..z(k-1)``.
    """
    if k < 5 or k % 2 == 0:
        raise GraphError(f"flower snarks need odd k >= 5, got {k}")
    c = lambda i: i
    x = lambda i: k + i
    y = lambda i: 2 * k + i
    z = lambda i: 3 * k + i
    pairs = []
    for i in range(k):
        pairs += [(c(i), x(i)), (c(i), y(i)), (c(i), z(i))]
        pairs.append((x(i), x((i + 1) % k)))
    ring = [y(i) for i in range(k)] + [z(i) for i in range(k)]
    pairs += [(ring[i], ring[(i + 1) % (2 * k)]) for i in range(2 * k)]
    return build_graph(4 * k, pairs)


# gadget vertices in local names; "z" is the original vertex that was expanded
GADGET_NAMES = ("x", "y", "z", "c1", "c2", "c3", "x'", "d1", "d2", "d3", "y'", "a", "b", "c", "z'")

# Hamiltonian a-b path through the 14 gadget vertices other than z'
_GADGET_PATH_AB = ("a", "d2", "z", "c3", "d3", "x", "c1", "x'", "c2", "y", "d1", "c", "y'", "b")

# three-fold symmetry of the gadget
_ROTATE = {
    "x": "y", "y": "z", "z": "x",
    "c1": "c2", "c2": "c3", "c3": "c1",
    "d1": "d2", "d2": "d3", "d3": "d1",
    "a": "b", "b": "c", "c": "a",
    "x'": "x'", "y'": "y'", "z'": "z'",
}


@dataclass(frozen=True)
class GadgetLabels:
    x: int
    y: int
    x_prime: int
    y_prime: int
    z_prime: int
    a: int
    b: int
    c: int
    local: dict[str, int]
    h_minus: tuple[int, ...]

    @property
    def exits(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def gadget_paths() -> dict[tuple[str, str], tuple[str, ...]]:
    """The three Hamiltonian paths between the neighbours of z', keyed by end pair."""
    paths = {}
    path = _GADGET_PATH_AB
    for _ in range(3):
        paths[(path[0], path[-1])] = path
        path = tuple(_ROTATE[v] for v in path)
    return paths


def extend_hypohamiltonian(h: Graph, z: int) -> tuple[Graph, GadgetLabels]:
    """Grow a cubic graph by 14 vertices around ``z``.

    The two edges of ``z`` with the smallest canonical indices are
    subdivided by ``x`` and ``y`` (joined to each other); the resulting
    triangle gets the x' star, then the y' star on the half-edges
    c1-y, c2-z, c3-x, and finally the z' star on the edges of y'.
    """
    if not is_cubic(h):
        raise GraphError("gadget extension needs a cubic graph")
    if not 0 <= z < h.n:
        raise GraphError(f"vertex {z} out of range")
    first, second = h.incident(z)[:2]
    nx_ = [w for w in h.edges[first] if w != z][0]
    ny_ = [w for w in h.edges[second] if w != z][0]
    names = [name for name in GADGET_NAMES if name != "z"]
    local = {name: h.n + i for i, name in enumerate(names)}
    local["z"] = z
    L = local
    pairs = [e for i, e in enumerate(h.edges) if i not in (first, second)]
    pairs += [(L["x"], nx_), (L["y"], ny_)]
    # triangle x-y-z, each side split into two subdivision vertices
    pairs += [(L["x"], L["c1"]), (L["c1"], L["d1"]), (L["d1"], L["y"])]
    pairs += [(L["y"], L["c2"]), (L["c2"], L["d2"]), (L["d2"], L["z"])]
    pairs += [(L["z"], L["c3"]), (L["c3"], L["d3"]), (L["d3"], L["x"])]
    pairs += [(L["x'"], L["c1"]), (L["x'"], L["c2"]), (L["x'"], L["c3"])]
    pairs += [(L["y'"], L["a"]), (L["a"], L["d2"])]
    pairs += [(L["y'"], L["b"]), (L["b"], L["d3"])]
    pairs += [(L["y'"], L["c"]), (L["c"], L["d1"])]
    pairs += [(L["z'"], L["a"]), (L["z'"], L["b"]), (L["z'"], L["c"])]
    g = build_graph(h.n + 14, pairs)
    labels = GadgetLabels(
        x=L["x"], y=L["y"], x_prime=L["x'"], y_prime=L["y'"], z_prime=L["z'"],
        a=L["a"], b=L["b"], c=L["c"], local=dict(local),
        h_minus=tuple(v for v in range(h.n) if v != z),
    )
    return g, labels


def k4_compose(
    parts: list[tuple[Graph, GadgetLabels]],
) -> tuple[Graph, CycleCover]:
    """Join three gadget graphs (minus z') through a new vertex.

    Adds x-a1, x-a2, x-a3, b1-c2, b2-c3, b3-c1.  Also returns a star cover
    whose centre is the cycle through x and the three gadget paths and whose
    tips are Hamiltonian cycles of the three H_i^- parts.
    """
    if len(parts) != 3:
        raise GraphError("k4_compose takes exactly three gadgets")
    pairs = []
    offset = 0
    maps = []
    for g, lab in parts:
        keep = [v for v in range(g.n) if v != lab.z_prime]
        new_id = {v: offset + i for i, v in enumerate(keep)}
        pairs += [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
        maps.append((new_id, lab, g))
        offset += len(keep)
    hub = offset
    (m1, l1, _), (m2, l2, _), (m3, l3, _) = maps
    pairs += [(hub, m1[l1.a]), (hub, m2[l2.a]), (hub, m3[l3.a])]
    pairs += [(m1[l1.b], m2[l2.c]), (m2[l2.b], m3[l3.c]), (m3[l3.b], m1[l1.c])]
    composed = build_graph(offset + 1, pairs)

    paths = gadget_paths()

    def route(idx: int, start: str, end: str) -> list[int]:
        new_id, lab, _ = maps[idx]
        path = paths.get((start, end)) or paths[(end, start)][::-1]
        return [new_id[lab.local[name]] for name in path]

    centre = [hub] + route(0, "a", "b") + route(1, "c", "b") + route(2, "c", "a")
    cycles = [CyclePath(tuple(centre))]
    for new_id, lab, g in maps:
        sub, relabel = delete_vertices(g, [v for v in range(g.n) if v not in set(lab.h_minus)])
        ham = hamiltonian_cycle(sub)
        if ham is None:
            raise RuntimeError("H^- part has no Hamiltonian cycle")
        back = {i: v for v, i in relabel.items()}
        cycles.append(CyclePath(tuple(new_id[back[v]] for v in ham.vertices)))
    on_cycles = {composed.edge_id(u, v) for c in cycles for u, v in c.pairs()}
    matching = [e for e in range(composed.m) if e not in on_cycles]
    derived = cover_from_matching(composed, matching)
    centre_idx = next(i for i, c in enumerate(derived.cycles) if hub in c.vertices)
    cover = CycleCover(derived.matching, derived.cycles, centre_idx)
    try:
        validate_cover(composed, cover)
    except GraphError as exc:
        raise RuntimeError(f"K4 composition witness failed: {exc}") from exc
    if len(cover.cycles) != 4:
        raise RuntimeError("K4 composition witness does not have four cycles")
    return composed, cover


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no vertex cut smaller than ``k``.

    Some vertex among the first ``k`` survives any cut of size < k, so it
    suffices to test local connectivity from those vertices to every
    non-adjacent vertex.
    """
    if k <= 0:
        return True
    if g.n <= k:
        return False
    for s in range(k):
        for t in range(g.n):
            if t == s or g.has_edge(s, t):
                continue
            if _local_connectivity(g, s, t, k) < k:
                return False
    return True


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Internally disjoint s-t paths (up to ``cap``) via unit-capacity vertex splitting."""
    # node 2v is v_in, 2v+1 is v_out
    residual: dict[int, dict[int, int]] = {}

    def arc(a, b):
        residual.setdefault(a, {}).setdefault(b, 0)
        residual.setdefault(b, {}).setdefault(a, 0)
        residual[a][b] += 1

    for v in range(g.n):
        if v not in (s, t):
            arc(2 * v, 2 * v + 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v)
        arc(2 * v + 1, 2 * u)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b, c in residual.get(a, {}).items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def random_star_like_with_cover(
    seed: int,
    centre_len: int,
    tip_lens: list[int],
    chord_budget: int = 0,
    max_tries: int = 200,
) -> tuple[Graph, CycleCover]:
    """Random 3-connected star-like cubic graph with its star cover.

    Centre is a cycle of ``centre_len`` vertices, each tip a cycle of the
    given length.  Tip vertices are matched to distinct centre vertices or
    to a non-adjacent vertex of the same tip (a tip chord).  Tips get just
    enough chords for their boundaries to fit on the centre, plus up to
    ``chord_budget`` extra; every tip keeps at least three boundary
    vertices.  Leftover centre vertices are paired by centre chords.
    Candidates that are not simple, 3-connected or star-shaped are redrawn.
    """
    if centre_len < 3 or any(t < 3 for t in tip_lens):
        raise GraphError("cycles need at least three vertices")
    if (centre_len + sum(tip_lens)) % 2:
        raise GraphError("odd total order: no perfect matching can exist")
    capacity = sum((t - 3) // 2 for t in tip_lens)
    needed = max(0, (sum(tip_lens) - centre_len + 1) // 2)
    if needed > capacity:
        raise GraphError("tips have too many boundary vertices for the centre")
    rng = random.Random(seed)
    for _ in range(max_tries):
        chords = min(capacity, needed + rng.randint(0, max(0, chord_budget)))
        built = _draw_star_like(rng, centre_len, tip_lens, chords)
        if built is None:
            continue
        g, cover = built
        if not is_cubic(g) or not is_connected(g):
            continue
        if is_star(contraction_graph(g, cover), cover.centre) is None:
            continue
        if not vertex_connectivity_at_least(g, 3):
            continue
        return g, cover
    raise GraphError(f"no valid instance after {max_tries} draws")


def random_star_like(seed: int, centre_len: int, tip_lens: list[int], chord_budget: int = 0) -> Graph:
    return random_star_like_with_cover(seed, centre_len, tip_lens, chord_budget)[0]


def random_suite_parameters(
    seed: int, centre: tuple[int, int] = (6, 14), tips: tuple[int, int] = (1, 4),
    tip_len: tuple[int, int] = (3, 9), chord_budget: int = 2,
) -> tuple[int, list[int], int]:
    """Deterministic feasible ``(centre_len, tip_lens, chord_budget)`` for ``seed``.

    Draws are repeated until the parity and boundary-room conditions of
    :func:`random_star_like_with_cover` hold.
    """
    rng = random.Random(f"params-{seed}")
    while True:
        c = rng.randint(*centre)
        ts = [rng.randint(*tip_len) for _ in range(rng.randint(*tips))]
        if (c + sum(ts)) % 2:
            continue
        if max(0, (sum(ts) - c + 1) // 2) > sum((t - 3) // 2 for t in ts):
            continue
        return c, ts, rng.randint(0, chord_budget)


def _draw_star_like(rng: random.Random, centre_len: int, tip_lens: list[int], n_chords: int):
    cycles = []
    nxt = 0
    for length in [centre_len] + list(tip_lens):
        cycles.append(list(range(nxt, nxt + length)))
        nxt += length
    cycle_pairs = set()
    for cyc in cycles:
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            cycle_pairs.add((min(a, b), max(a, b)))

    room = [(len(c) - 3) // 2 for c in cycles[1:]]
    per_tip = [0] * len(room)
    for _ in range(n_chords):
        open_tips = [i for i, r in enumerate(room) if per_tip[i] < r]
        per_tip[rng.choice(open_tips)] += 1
    matching = []
    outward = []
    for cyc, chords in zip(cycles[1:], per_tip):
        free = list(cyc)
        rng.shuffle(free)
        for _ in range(chords):
            pair = _pick_chord(rng, free, cycle_pairs)
            if pair is None:
                return None
            matching.append(pair)
        outward.extend(free)
    centre = list(cycles[0])
    if len(outward) > len(centre) or (len(centre) - len(outward)) % 2:
        return None
    rng.shuffle(centre)
    for v, w in zip(outward, centre):
        matching.append((v, w))
    spare = centre[len(outward):]
    while spare:
        pair = _pick_chord(rng, spare, cycle_pairs)
        if pair is None:
            return None
        matching.append(pair)
    try:
        g = build_graph(nxt, list(cycle_pairs) + matching)
    except GraphError:
        return None
    if g.m != len(cycle_pairs) + len(matching):
        return None
    cover_cycles = [CyclePath(tuple(c)) for c in cycles]
    m_ids = tuple(sorted(g.edge_id(u, v) for u, v in matching))
    derived = cover_from_matching(g, m_ids) if is_cubic(g) else None
    if derived is None:
        return None
    centre_idx = next(i for i, c in enumerate(derived.cycles) if cover_cycles[0].vertices[0] in c.vertices)
    return g, CycleCover(derived.matching, derived.cycles, centre_idx)


def _pick_chord(rng: random.Random, pool: list[int], forbidden: set) -> Optional[tuple[int, int]]:
    """Remove and return a random pair from ``pool`` that is not a forbidden edge."""
    options = [
        (i, j) for i in range(len(pool)) for j in range(i + 1, len(pool))
        if (min(pool[i], pool[j]), max(pool[i], pool[j])) not in forbidden
    ]
    if not options:
        return None
    i, j = rng.choice(options)
    a, b = pool[i], pool[j]
    pool.remove(a)
    pool.remove(b)
    return (a, b)


def complete4() -> Graph:
    return build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def k33() -> Graph:
    return build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def prism() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def cube() -> Graph:
    return build_graph(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def fixture_e4() -> Graph:
    """Hexagon 0..5 with triangles 6-7-8 on 0,2,4 and 9-10-11 on 1,3,5."""
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    triangles = [(6, 7), (7, 8), (8, 6), (9, 10), (10, 11), (11, 9)]
    spokes = [(0, 6), (2, 7), (4, 8), (1, 9), (3, 10), (5, 11)]
    return build_graph(12, hexagon + triangles + spokes)


def fixture_e5() -> Graph:
    """Hexagon 0..5 with chord 0-3 and a 4-cycle 6-7-8-9 hanging off 1, 2, 4, 5."""
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    square = [(6, 7), (7, 8), (8, 9), (9, 6)]
    spokes = [(6, 1), (7, 4), (8, 2), (9, 5)]
    return build_graph(10, hexagon + [(0, 3)] + square + spokes)


FIXTURES = {
    "k4": complete4,
    "k33": k33,
    "prism": prism,
    "cube": cube,
    "petersen": petersen,
    "e4": fixture_e4,
    "e5": fixture_e5,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name.lower()]()
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
