from itertools import combinations

import pytest

from ptolemy_cc.diagram import PtolemyDiagram
from ptolemy_cc.polygon import Diagonal, crosses, diagonals, normalize

SQUARE_OCTAGON = [(2, 4), (2, 5), (1, 4), (1, 5), (5, 8)]
MIXED_OCTAGON = [(2, 6), (2, 7), (2, 8), (4, 6), (6, 8), (1, 6), (1, 7)]


def full_clique(N):
    return PtolemyDiagram(N, frozenset(diagonals(N)))


def brute_force_ptolemy(N):
    """Every diagonal subset passing the crossing rule, by direct filtering."""
    ds = diagonals(N)
    idx = {d: i for i, d in enumerate(ds)}
    rules = []
    for x, y in combinations(ds, 2):
        if crosses(x, y):
            req = 0
            for u in x:
                for v in y:
                    c = normalize(u, v, N)
                    if isinstance(c, Diagonal):
                        req |= 1 << idx[c]
            rules.append(((1 << idx[x]) | (1 << idx[y]), req))
    out = []
    for S in range(1 << len(ds)):
        if all(S & both != both or not req & ~S for both, req in rules):
            out.append(frozenset(d for d in ds if S >> idx[d] & 1))
    return out


@pytest.fixture
def square_octagon():
    return PtolemyDiagram.from_pairs(8, SQUARE_OCTAGON)


@pytest.fixture
def mixed_octagon():
    return PtolemyDiagram.from_pairs(8, MIXED_OCTAGON)


@pytest.fixture
def clique8():
    return full_clique(8)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, text in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
