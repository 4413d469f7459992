import pytest

from stardec import generators as gen
from stardec.cycle_decomp import make_tip_context
from stardec.graph_core import CyclePath, build_graph


def cycle_with_chords(n, chords):
    """Host graph made of the cycle 0..n-1 plus ``chords``, with its tip context."""
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)] + list(chords))
    return g, make_tip_context(g, CyclePath(tuple(range(n))))


def pairs(g, ids):
    return {g.edges[e] for e in ids}


@pytest.fixture
def petersen():
    return gen.petersen()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
