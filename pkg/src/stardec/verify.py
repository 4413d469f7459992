"""Independent checks for every decomposition flavour.

Nothing here calls into the constructors; the helpers below are private so
that the verifiers can act as oracles for the rest of the package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph_core import Graph, ThreeDecomposition


@dataclass
class VerificationReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule: str, detail: str) -> None:
        self.violations.append((rule, detail))

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"[{rule}] {detail}" for rule, detail in self.violations)


class _Forest:
    def __init__(self, vertices):
        self.parent = {v: v for v in vertices}

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def join(self, u, v) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.parent[ru] = rv
        return True


def _degrees(g: Graph, edges) -> Counter:
    deg: Counter = Counter()
    for e in edges:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def _check_partition(g: Graph, report, parts: dict[str, tuple], expected: set[int]) -> None:
    seen: Counter = Counter()
    for name, es in parts.items():
        for e in es:
            if not 0 <= e < g.m:
                report.add("partition", f"{name} holds unknown edge index {e}")
            seen[e] += 1
    doubled = sorted(e for e, c in seen.items() if c > 1)
    if doubled:
        report.add("partition", f"edges assigned more than once: {doubled}")
    missing = sorted(expected - set(seen))
    if missing:
        report.add("partition", f"edges left unassigned: {missing}")
    extra = sorted(set(seen) - expected)
    if extra:
        report.add("partition", f"edges outside the decomposed subgraph: {extra}")


def _acyclic_components(g: Graph, vertices, edges, report, rule: str) -> _Forest:
    forest = _Forest(vertices)
    for e in edges:
        u, v = g.edges[e]
        if u not in forest.parent or v not in forest.parent:
            report.add(rule, f"edge {e} leaves the scope")
            continue
        if not forest.join(u, v):
            report.add(rule, f"edge {e} = {g.edges[e]} closes a cycle")
    return forest


def _check_matching(g: Graph, edges, report) -> None:
    deg = _degrees(g, edges)
    shared = sorted(v for v, d in deg.items() if d > 1)
    if shared:
        report.add("matching", f"matching edges share vertices {shared}")


def _path_ends(g: Graph, edges, report, rule: str) -> set[int]:
    """Degree-1 vertices of a max-degree-2 edge set."""
    deg = _degrees(g, edges)
    high = sorted(v for v, d in deg.items() if d > 2)
    if high:
        report.add(rule, f"cycle part has degree > 2 at {high}")
    return {v for v, d in deg.items() if d == 1}


def verify_three_decomposition(g: Graph, d: ThreeDecomposition) -> VerificationReport:
    report = VerificationReport()
    _check_partition(
        g, report, {"tree": d.tree, "cycles": d.cycles, "matching": d.matching}, set(range(g.m))
    )
    forest = _acyclic_components(g, range(g.n), d.tree, report, "tree")
    roots = {forest.find(v) for v in range(g.n)}
    if len(roots) > 1:
        report.add("tree", f"tree has {len(roots)} components, expected 1 spanning all vertices")
    ends = _path_ends(g, d.cycles, report, "cycles")
    if ends:
        report.add("cycles", f"cycle part has path ends {sorted(ends)}")
    _check_matching(g, d.matching, report)
    return report


def _vertex_classes(g: Graph, scope: set[int], tree, cycles, matching) -> dict[int, str]:
    """Class of each boundary vertex of ``g[scope]`` given a partial decomposition."""
    tdeg = _degrees(g, tree)
    cdeg = _degrees(g, cycles)
    mdeg = _degrees(g, matching)
    out = {}
    for v in scope:
        inside = sum(1 for w in g.adjacency[v] if w in scope)
        if inside != 2:
            continue
        if tdeg[v] == 0:
            out[v] = "a0"
        elif tdeg[v] == 2:
            out[v] = "a2"
        elif cdeg[v] == 1:
            out[v] = "ap"
        elif mdeg[v] == 1:
            out[v] = "am"
        else:
            out[v] = "?"
    return out


def verify_i_decomposition(g: Graph, cover, absorbed, d) -> VerificationReport:
    """Check a partial decomposition of ``G_I`` for the cycle indices ``absorbed``.

    ``d`` needs ``tree_edges``, ``cycle_edges`` and ``matching_edges``.
    """
    report = VerificationReport()
    absorbed = set(absorbed)
    if cover.centre not in absorbed:
        report.add("scope", "absorbed cycles do not include the centre")
    scope = {v for i in absorbed for v in cover.cycles[i].vertices}
    expected = {i for i, (u, v) in enumerate(g.edges) if u in scope and v in scope}
    _check_partition(
        g, report,
        {"tree": d.tree_edges, "cycles": d.cycle_edges, "matching": d.matching_edges},
        expected,
    )
    forest = _acyclic_components(g, scope, d.tree_edges, report, "tree")
    touched = {v for e in d.tree_edges for v in g.edges[e]}
    cubic_here = {v for v in scope if sum(1 for w in g.adjacency[v] if w in scope) == 3}
    missing = sorted(cubic_here - touched)
    if missing:
        report.add("tree", f"degree-3 vertices outside the tree: {missing}")
    if len({forest.find(v) for v in touched}) > 1:
        report.add("tree", "tree part is disconnected")
    on_boundary = scope - cubic_here
    ends = _path_ends(g, d.cycle_edges, report, "cycles")
    stray = sorted(ends - on_boundary)
    if stray:
        report.add("cycles", f"path components end off the boundary at {stray}")
    _check_matching(g, d.matching_edges, report)
    return report


def verify_a_decomposition(ctx, cls, d) -> VerificationReport:
    """Check an ``(a0, ap, am, a2)``-decomposition of the cycle in ``ctx``."""
    g = ctx.host
    report = VerificationReport()
    scope = set(ctx.cycle.vertices)
    boundary = {v for v in scope if sum(1 for w in g.adjacency[v] if w in scope) == 2}
    named = [set(cls.a0), set(cls.ap), set(cls.am), set(cls.a2)]
    if sum(len(s) for s in named) != len(set().union(*named)):
        report.add("classes", "boundary classes overlap")
    if set().union(*named) != boundary:
        report.add("classes", "boundary classes do not cover exactly the boundary")
    expected = {i for i, (u, v) in enumerate(g.edges) if u in scope and v in scope}
    _check_partition(
        g, report,
        {"forest": d.tree_edges, "cycles": d.cycle_edges, "matching": d.matching_edges},
        expected,
    )
    forest = _acyclic_components(g, scope, d.tree_edges, report, "forest")
    _check_matching(g, d.matching_edges, report)

    fdeg = _degrees(g, d.tree_edges)
    am, a2 = set(cls.am), set(cls.a2)
    comps: dict[int, list[int]] = {}
    for v in sorted(scope):
        comps.setdefault(forest.find(v), []).append(v)
    for members in comps.values():
        anchors = [v for v in members if v in a2 or v in am]
        if not anchors:
            report.add("cond_i", f"forest component {members} has no a2/am vertex")
            continue
        counted = [v for v in anchors if v in am or fdeg[v] == 1]
        if len(counted) > 1:
            report.add("cond_i", f"forest component has several leaf/am anchors {counted}")

    ends = _path_ends(g, d.cycle_edges, report, "cycles")
    if ends != set(cls.ap):
        report.add("cond_ii", f"path ends {sorted(ends)} differ from ap {sorted(cls.ap)}")
    return report


def verify_good(g: Graph, cover, d) -> VerificationReport:
    """Per-tip cardinality rules for a decomposition of the centre cycle alone."""
    report = verify_i_decomposition(g, cover, {cover.centre}, d)
    scope = set(cover.cycles[cover.centre].vertices)
    classes = _vertex_classes(g, scope, d.tree_edges, d.cycle_edges, d.matching_edges)
    where = {v: i for i, c in enumerate(cover.cycles) for v in c.vertices}
    per_tip: dict[int, Counter] = {}
    for v, cls in classes.items():
        outside = [w for w in g.adjacency[v] if w not in scope]
        if len(outside) != 1:
            continue
        per_tip.setdefault(where[outside[0]], Counter())[cls] += 1
    for tip, counts in sorted(per_tip.items()):
        if counts["?"]:
            report.add("good", f"tip {tip}: unclassifiable centre vertex")
        if counts["a0"] > 1:
            report.add("good", f"tip {tip}: {counts['a0']} a0 neighbours")
        if counts["am"] > 1:
            report.add("good", f"tip {tip}: {counts['am']} am neighbours")
        if counts["ap"] not in (0, 2):
            report.add("good", f"tip {tip}: {counts['ap']} ap neighbours")
        nonempty = sum(1 for c in ("a0", "am", "ap") if counts[c])
        if nonempty > 1:
            report.add("good", f"tip {tip}: several special classes present")
    return report
