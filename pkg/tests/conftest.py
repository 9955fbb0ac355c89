import itertools
from pathlib import Path

import pytest

from lrbquiver import arrangement_faces, boolean_arrangement, braid_arrangement, free_lrb

DATA = Path(__file__).resolve().parents[1] / "src" / "lrbquiver" / "data"

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


THREE_LINES = [[1, 0], [0, 1], [1, 1]]


def trivial_band():
    from lrbquiver import LeftRegularBand
    import numpy as np

    return LeftRegularBand(np.zeros((1, 1), dtype=np.int64), identity=0, labels=("1",))


EXAMPLES = {
    "trivial": trivial_band,
    "free1": lambda: free_lrb(1),
    "free2": lambda: free_lrb(2),
    "free3": lambda: free_lrb(3),
    "bool2": lambda: boolean_arrangement(2),
    "braid3": lambda: braid_arrangement(3),
    "lines3": lambda: arrangement_faces(THREE_LINES),
}


@pytest.fixture(params=sorted(EXAMPLES))
def example(request):
    return EXAMPLES[request.param]()


@pytest.fixture(scope="session")
def free3():
    return free_lrb(3)


@pytest.fixture(scope="session")
def braid3():
    return braid_arrangement(3)


def brute_is_lrb(S):
    """Independent triple loop over the raw table."""
    t = S.table
    n = S.size
    e = S.identity
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return False
    for a, b in itertools.product(range(n), repeat=2):
        if t[a][a] != a or t[t[a][b]][a] != t[a][b]:
            return False
    return e is not None and all(t[e][a] == a == t[a][e] for a in range(n))
