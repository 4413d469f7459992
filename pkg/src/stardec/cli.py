"""Command-line entry point.

Exit codes: 0 ok, 1 invalid decomposition or failed check, 2 input outside
the supported class, 3 I/O or format error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from . import generators as gen
from .assembly import NotApplicable, three_decompose
from .graph_core import GraphError
from .matching_star import BudgetExceeded, find_star_matching
from .oracle import brute_force_three_decomposition
from .verify import verify_three_decomposition

EXIT_OK, EXIT_INVALID, EXIT_NOT_APPLICABLE, EXIT_IO = 0, 1, 2, 3
DEFAULT_SEED = 1

log = logging.getLogger("stardec")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _write(text: str, dest: Optional[str]) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(text)
        return
    try:
        Path(dest).write_text(text)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {dest}: {exc}") from None


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc}") from None


def _load_graph(path: str):
    text = _read_text(path)
    try:
        return formats.parse_graph(text, None if path == "-" else path)
    except formats.FormatError as exc:
        raise _Fail(EXIT_IO, f"{path}: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_generate(args) -> int:
    kind = args.kind
    extra = args.params
    try:
        if kind == "petersen":
            g = gen.petersen()
        elif kind == "flower":
            if len(extra) != 1:
                raise _Fail(EXIT_IO, "usage: generate flower K")
            g = gen.flower_snark(int(extra[0]))
        elif kind == "k4-compose":
            base = gen.petersen()
            g, _ = gen.k4_compose([gen.extend_hypohamiltonian(base, 0) for _ in range(3)])
        elif kind == "random":
            if args.centre is None or args.tips is None:
                raise _Fail(EXIT_IO, "generate random needs --centre and --tips")
            seed = args.seed if args.seed is not None else int(os.environ.get("STARDEC_SEED", DEFAULT_SEED))
            g = gen.random_star_like(seed, args.centre, args.tips, args.chords)
        elif kind == "fixture":
            if len(extra) != 1:
                raise _Fail(EXIT_IO, "usage: generate fixture NAME")
            g = gen.fixture(extra[0])
        else:
            raise _Fail(EXIT_IO, f"unknown generator {kind!r}")
    except (GraphError, ValueError) as exc:
        raise _Fail(EXIT_IO, str(exc)) from None
    _write(formats.format_graph(g, args.format), args.output)
    return EXIT_OK


def cmd_detect(args) -> int:
    g = _load_graph(args.graph)
    try:
        cover = find_star_matching(g, budget=args.budget)
    except BudgetExceeded:
        print("unknown")
        return EXIT_NOT_APPLICABLE
    if cover is None:
        print("not star-like")
        return EXIT_NOT_APPLICABLE
    _write(formats.cover_to_json(cover), args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    cover = None
    if args.cover:
        try:
            cover = formats.cover_from_json(_read_text(args.cover))
        except formats.FormatError as exc:
            raise _Fail(EXIT_IO, f"{args.cover}: {exc}") from None
    try:
        d = three_decompose(g, cover=cover, budget=args.budget)
    except NotApplicable as exc:
        raise _Fail(EXIT_NOT_APPLICABLE, str(exc)) from None
    except BudgetExceeded as exc:
        raise _Fail(EXIT_NOT_APPLICABLE, f"unknown: {exc}") from None
    code = EXIT_OK
    if args.check:
        report = verify_three_decomposition(g, d)
        print(f"check: {report.summary()}", file=sys.stderr)
        if not report.ok:
            code = EXIT_INVALID
    if args.oracle_crosscheck is not None and g.n <= args.oracle_crosscheck:
        try:
            other = brute_force_three_decomposition(g)
        except BudgetExceeded:
            print("crosscheck: oracle ran out of budget", file=sys.stderr)
        else:
            if other is None or not verify_three_decomposition(g, other).ok:
                print("crosscheck: oracle disagrees", file=sys.stderr)
                code = EXIT_INVALID
            else:
                print("crosscheck: oracle agrees", file=sys.stderr)
    _write(formats.decomposition_to_json(g, d), args.output)
    if args.dot:
        _write(formats.to_dot(g, d), args.dot)
    return code


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        _, d = formats.decomposition_from_json(_read_text(args.decomposition), g)
    except formats.FormatError as exc:
        raise _Fail(EXIT_IO, f"{args.decomposition}: {exc}") from None
    report = verify_three_decomposition(g, d)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    try:
        d = brute_force_three_decomposition(g, budget=args.budget)
    except GraphError as exc:
        raise _Fail(EXIT_NOT_APPLICABLE, str(exc)) from None
    except BudgetExceeded:
        print("none within budget")
        return EXIT_INVALID
    if d is None:
        print("none: search exhausted")
        return EXIT_INVALID
    _write(formats.decomposition_to_json(g, d), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stardec", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write an example graph")
    g.add_argument("kind", choices=["petersen", "flower", "k4-compose", "random", "fixture"])
    g.add_argument("params", nargs="*", help="K for flower, NAME for fixture")
    g.add_argument("--seed", type=int)
    g.add_argument("--centre", type=int)
    g.add_argument("--tips", type=_int_list)
    g.add_argument("--chords", type=int, default=0)
    g.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("detect", help="search for a star cover")
    d.add_argument("graph")
    d.add_argument("--budget", type=int)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_detect)

    c = sub.add_parser("decompose", help="compute a 3-decomposition")
    c.add_argument("graph")
    c.add_argument("--cover")
    c.add_argument("--budget", type=int)
    c.add_argument("--check", action="store_true")
    c.add_argument("--oracle-crosscheck", type=int, metavar="MAXN")
    c.add_argument("--dot")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="check a decomposition file")
    v.add_argument("graph")
    v.add_argument("decomposition")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force 3-decomposition")
    o.add_argument("graph")
    o.add_argument("--budget", type=int, default=5_000_000)
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_oracle)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_IO
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"stardec: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run())
