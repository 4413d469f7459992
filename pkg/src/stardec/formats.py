"""Reading and writing graphs, covers and decompositions."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .graph_core import CyclePath, Graph, GraphError, ThreeDecomposition, build_graph
from .matching_star import CycleCover

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed input file."""


# -- edge list ---------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge list")
    try:
        nums = [[int(x) for x in row] for row in rows]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    if any(len(row) != 2 for row in nums):
        raise FormatError("every edge-list line must hold exactly two integers")
    (n, m), pairs = nums[0], nums[1:]
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    g = _build(n, pairs)
    if g.m != m:
        raise FormatError("edge list contains repeated edges")
    return g


def _build(n, pairs) -> Graph:
    try:
        return build_graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


# -- graph6 ------------------------------------------------------------------


def to_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    body = bytes(out).decode("ascii")
    return (GRAPH6_HEADER if header else "") + body + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    s = s.splitlines()[0] if s else s
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError("graph6 string contains characters outside '?'..'~'")
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field")
        n, rest = _bigendian6(data[2:8]), data[8:]
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n, rest = _bigendian6(data[1:4]), data[4:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise FormatError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}")
    bits = [(d >> (5 - k)) & 1 for d in rest for k in range(6)]
    pairs = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                pairs.append((i, j))
            idx += 1
    return _build(n, pairs)


def _bigendian6(chunks) -> int:
    val = 0
    for c in chunks:
        val = (val << 6) | c
    return val


# -- dispatch ----------------------------------------------------------------


def looks_like_graph6(text: str, path: Union[str, Path, None] = None) -> bool:
    if path is not None and Path(path).suffix.lower() == ".g6":
        return True
    s = text.lstrip()
    if s.startswith(GRAPH6_HEADER):
        return True
    return bool(s) and not (s[0].isdigit() or s[0] == "#")


def parse_graph(text: str, path=None) -> Graph:
    return parse_graph6(text) if looks_like_graph6(text, path) else parse_edge_list(text)


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(), path)


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return to_edge_list(g)
    if fmt == "graph6":
        return to_graph6(g)
    raise FormatError(f"unknown graph format {fmt!r}")


# -- JSON documents ----------------------------------------------------------


def decomposition_to_json(g: Graph, d: ThreeDecomposition) -> str:
    doc = {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "tree": list(d.tree),
        "cycles": list(d.cycles),
        "matching": list(d.matching),
    }
    return json.dumps(doc, indent=1) + "\n"


def decomposition_from_json(text: str, g: Graph = None) -> tuple[Graph, ThreeDecomposition]:
    """Parse a decomposition; if ``g`` is given its edge list must agree."""
    doc = _load(text)
    try:
        n = int(doc["n"])
        pairs = [tuple(int(x) for x in e) for e in doc["edges"]]
        parts = [tuple(int(e) for e in doc[k]) for k in ("tree", "cycles", "matching")]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed decomposition document: {exc!r}") from None
    own = _build(n, pairs)
    if list(own.edges) != pairs:
        raise FormatError("decomposition edges are not in canonical order")
    if g is not None and (g.n != own.n or g.edges != own.edges):
        raise FormatError("decomposition was produced for a different graph")
    return own, ThreeDecomposition(*parts)


def cover_to_json(cover: CycleCover) -> str:
    doc = {
        "matching": list(cover.matching),
        "cycles": [list(c.vertices) for c in cover.cycles],
        "centre": cover.centre,
    }
    return json.dumps(doc) + "\n"


def cover_from_json(text: str) -> CycleCover:
    doc = _load(text)
    try:
        matching = tuple(sorted(int(e) for e in doc["matching"]))
        cycles = tuple(CyclePath(tuple(int(v) for v in c)) for c in doc["cycles"])
        centre = int(doc.get("centre", 0))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed cover document: {exc!r}") from None
    return CycleCover(matching, cycles, centre)


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    return doc


# -- DOT ---------------------------------------------------------------------

PART_COLOURS = {"tree": "green", "cycles": "red", "matching": "blue"}


def to_dot(g: Graph, d: ThreeDecomposition) -> str:
    label = {}
    for part in PART_COLOURS:
        for e in getattr(d, part):
            label[e] = part
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        part = label.get(e)
        attr = f" [color={PART_COLOURS[part]}]" if part else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
