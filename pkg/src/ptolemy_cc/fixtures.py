"""Worked examples with their published values, runnable as a self-test."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ccmap import rho_table
from .diagram import PtolemyDiagram, decompose, find_violation
from .frieze import (build_band, diamond_determinants, locate_pattern,
                     row_contains_cyclic)
from .polygon import Diagonal, diagonals


@dataclass(frozen=True)
class Fixture:
    name: str
    N: int
    pairs: tuple
    rho: dict = field(default_factory=dict)            # (a, b) -> value
    dissecting: tuple | None = None
    cells: tuple | None = None                          # ((vertices...), kind)
    quiver: tuple | None = None                         # (w, column, values)
    cyclic_rows: tuple = ()                             # (w, values)
    row_values: dict = field(default_factory=dict)      # w -> value set
    determinants: frozenset | None = None               # allowed values
    exact_determinants: bool = False                    # ... and all of them occur

    def diagram(self) -> PtolemyDiagram:
        return PtolemyDiagram.from_pairs(self.N, self.pairs)


def _clique(N: int) -> tuple:
    return tuple(tuple(d) for d in diagonals(N))


SQUARE_OCTAGON = ((2, 4), (2, 5), (1, 4), (1, 5), (5, 8))
MIXED_OCTAGON = ((2, 6), (2, 7), (2, 8), (4, 6), (6, 8), (1, 6), (1, 7))

FIXTURES = (
    Fixture("ptolemy-octagon", 8, SQUARE_OCTAGON, rho={(2, 4): 1}),
    Fixture(
        "dissection-octagon", 8, SQUARE_OCTAGON,
        dissecting=((1, 5), (2, 4), (5, 8)),
        cells=(((2, 3, 4), "empty"), ((1, 2, 4, 5), "clique"),
               ((1, 5, 8), "empty"), ((5, 6, 7, 8), "empty")),
    ),
    Fixture("clique-octagon", 8, _clique(8), rho={(2, 7): 15},
            dissecting=(), cells=(((1, 2, 3, 4, 5, 6, 7, 8), "clique"),)),
    Fixture(
        "mixed-octagon", 8, MIXED_OCTAGON,
        rho={(4, 6): 1, (2, 4): 1, (2, 8): 3, (6, 8): 3, (4, 8): 6, (5, 8): 9},
        quiver=((6, 2, (5, 3, 3, 3, 4)),
                (5, 1, (4, 9, 3, 3, 6, 4)),
                (4, 2, (6, 7, 1, 4, 6)),
                (3, 1, (6, 4, 2, 1, 4, 9)),
                (2, 2, (4, 1, 2, 1, 5))),
        determinants=frozenset({0, 1, 6}),
    ),
    Fixture("pentagon-fan", 5, ((1, 3), (1, 4)),
            cyclic_rows=((2, (3, 1, 2, 2, 1)),), determinants=frozenset({1})),
    Fixture("clique-4gon", 4, _clique(4), row_values={2: {2}},
            determinants=frozenset({3}), exact_determinants=True),
    Fixture("clique-5gon", 5, _clique(5), row_values={2: {3}, 3: {3}},
            determinants=frozenset({6}), exact_determinants=True),
    Fixture("clique-6gon", 6, _clique(6), row_values={2: {4}, 3: {6}, 4: {4}},
            determinants=frozenset({10, 20}), exact_determinants=True),
    Fixture("clique-7gon", 7, _clique(7), row_values={2: {5}, 3: {10}, 4: {10}, 5: {5}},
            determinants=frozenset({15, 50}), exact_determinants=True),
)


def check_fixture(fx: Fixture) -> list[tuple[str, bool]]:
    """Run every expectation of ``fx``; one ``(label, passed)`` per check."""
    d = fx.diagram()
    out = [("ptolemy condition", find_violation(d) is None)]
    if not out[0][1]:
        return out
    if fx.dissecting is not None or fx.cells is not None:
        dec = decompose(d)
        if fx.dissecting is not None:
            out.append(("dissecting diagonals",
                        dec.dissecting == {Diagonal(*p) for p in fx.dissecting}))
        if fx.cells is not None:
            got = {(c.vertices, c.kind.value) for c in dec.cells}
            out.append(("cells", got == set(fx.cells)))
    table = rho_table(d)
    for (a, b), v in fx.rho.items():
        out.append((f"rho{{{a},{b}}} = {v}", table[(a, b)] == v))
    band = build_band(table)
    if fx.quiver is not None:
        out.append(("quiver table", locate_pattern(band, fx.quiver) is not None))
    for w, values in fx.cyclic_rows:
        out.append((f"row {w} contains {' '.join(map(str, values))}",
                    row_contains_cyclic(band, w, values)))
    for w, values in fx.row_values.items():
        out.append((f"row {w} values {sorted(values)}", set(band.row(w)) == values))
    if fx.determinants is not None:
        dets = {r.determinant for r in diamond_determinants(band)}
        if fx.exact_determinants:
            out.append((f"determinants = {sorted(fx.determinants)}", dets == fx.determinants))
        else:
            out.append((f"determinants in {sorted(fx.determinants)}", dets <= fx.determinants))
    return out


def run_fixtures() -> list[tuple[str, str, bool]]:
    return [(fx.name, label, ok) for fx in FIXTURES for label, ok in check_fixture(fx)]
