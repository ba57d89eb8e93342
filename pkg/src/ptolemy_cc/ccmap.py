"""The generalized Caldero-Chapoton map of a Ptolemy diagram.

Values are computed by the exchange recursion: a diagonal ``m`` crossing a
dissecting diagonal ``r`` satisfies

    rho(m) = rho(a') rho(a'') + rho(b') rho(b'')

where ``a', a'', b', b''`` are the sides of the quadrilateral spanned by
``m`` and ``r`` (sides that are polygon edges contribute 1).  Diagonals
crossing nothing have value 1, and a diagonal interior to a clique cell
with ``a`` and ``b`` cell vertices on its two sides has value
``binomial(a + b, a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .diagram import (CellKind, Cell, Decomposition, PtolemyDiagram,
                      StructureError, decompose, validate)
from .polygon import (Chord, Diagonal, Edge, PolygonError, arc, as_diagonal,
                      between, chord, crosses)
from .tables import polygon_tables


class ExchangeSplit(NamedTuple):
    r: Diagonal
    pair1: tuple
    pair2: tuple


@dataclass(frozen=True)
class RhoTable:
    N: int
    values: dict

    def __getitem__(self, key) -> int:
        c = chord(key[0], key[1], self.N)
        if isinstance(c, Edge):
            return 1
        return self.values[c]

    def __len__(self):
        return len(self.values)

    def items(self):
        return sorted(self.values.items())


def clique_rho(cell: Cell, c: Diagonal) -> int:
    """Value on a diagonal interior to a clique cell."""
    if cell.kind is not CellKind.CLIQUE:
        raise ValueError(f"cell {cell.vertices} is not a clique")
    if c.a not in cell.vertices or c.b not in cell.vertices:
        raise ValueError(f"{c} has an endpoint outside the cell {cell.vertices}")
    if not cell.has_interior(c):
        raise ValueError(f"{c} is a side of the cell {cell.vertices}, not interior")
    a, b = cell.sides_of(c)
    return comb(a + b, a)


def _anchor_side(r: Diagonal, anchor: int, N: int) -> frozenset:
    if between(r.a, anchor, r.b, N):
        return frozenset(arc(r.a, r.b, N))
    return frozenset(arc(r.b, r.a, N))


def first_crossed_dissecting(m: Diagonal, dec: Decomposition, anchor: int,
                             N: int) -> Diagonal | None:
    """The dissecting diagonal met first when walking along ``m`` from ``anchor``."""
    if anchor not in m:
        raise ValueError(f"anchor {anchor} is not an endpoint of {m}")
    crossed = [r for r in sorted(dec.dissecting) if crosses(m, r)]
    for r in crossed:
        side = _anchor_side(r, anchor, N)
        if not any(o != r and o.a in side and o.b in side for o in crossed):
            return r
    return None


def exchange_split(m: Diagonal, r: Diagonal, N: int) -> ExchangeSplit:
    """Opposite side pairs of the quadrilateral r.a, m.a, r.b, m.b."""
    if not crosses(m, r):
        raise ValueError(f"{m} and {r} do not cross")
    return ExchangeSplit(
        r,
        (chord(r.a, m.a, N), chord(r.b, m.b, N)),
        (chord(m.a, r.b, N), chord(m.b, r.a, N)),
    )


class RhoCalculator:
    """Memoized values of the map for one fixed diagram.

    ``anchor`` picks the endpoint from which the first crossed dissecting
    diagonal is found: ``"low"`` (smaller label) or ``"high"``.
    """

    def __init__(self, d: PtolemyDiagram, anchor: str = "low"):
        if anchor not in ("low", "high"):
            raise ValueError(f"anchor must be 'low' or 'high', not {anchor!r}")
        validate(d)
        self.diagram = d
        self.N = d.N
        self.anchor = anchor
        self.decomposition = decompose(d)
        self._tables = polygon_tables(d.N)
        self._memo: dict[Diagonal, int] = {}

    def rho(self, m: Diagonal) -> int:
        try:
            return self._memo[m]
        except KeyError:
            pass
        t = self._tables
        if m not in t.index:
            raise PolygonError(f"{m!r} is not a diagonal of the {self.N}-gon")
        if t.cross[t.index[m]] & self.diagram.mask == 0:
            value = 1
        else:
            cell = self.decomposition.cell_of(m)
            if cell is not None and cell.kind is CellKind.CLIQUE:
                value = clique_rho(cell, m)
            else:
                anchor = m.a if self.anchor == "low" else m.b
                r = first_crossed_dissecting(m, self.decomposition, anchor, self.N)
                if r is None:
                    raise StructureError(f"{m} crosses the diagram but no dissecting diagonal")
                split = exchange_split(m, r, self.N)
                value = self.rho_sum(split.pair1) + self.rho_sum(split.pair2)
        self._memo[m] = value
        return value

    def rho_sum(self, parts: Iterable[Chord]) -> int:
        """Value on a direct sum; edges are the zero object."""
        value = 1
        for p in parts:
            if not isinstance(p, Edge):
                value *= self.rho(p)
        return value

    def table(self) -> RhoTable:
        return RhoTable(self.N, {m: self.rho(m) for m in self._tables.diags})


def _diag(m, N: int) -> Diagonal:
    if isinstance(m, Diagonal):
        return m
    return as_diagonal(m, N)


def rho(m: Diagonal | Sequence[int], d: PtolemyDiagram, anchor: str = "low") -> int:
    return RhoCalculator(d, anchor).rho(_diag(m, d.N))


def rho_table(d: PtolemyDiagram, anchor: str = "low") -> RhoTable:
    return RhoCalculator(d, anchor).table()


def rho_sum(parts: Iterable[Chord], d: PtolemyDiagram) -> int:
    return RhoCalculator(d).rho_sum(parts)
