"""Ptolemy diagrams: validation, closure, cell decomposition, enumeration."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from . import kernels
from .polygon import (Diagonal, PolygonError, as_diagonal, check_size,
                      crosses, normalize, suspend)
from .tables import hull_chords, polygon_tables

MAX_ENUMERATE_N = 9


class GuardError(ValueError):
    """A size guard refused to run an exponential computation."""


class StructureError(RuntimeError):
    """A cell carries some but not all of its interior diagonals."""


class ClosureViolation(ValueError):
    """Two crossing diagonals whose hull chord is missing from the set."""

    def __init__(self, first: Diagonal, second: Diagonal, missing: Diagonal):
        self.first = first
        self.second = second
        self.missing = missing
        super().__init__(f"{first} and {second} cross but {missing} is missing")


class DiagramFormatError(ValueError):
    """Malformed diagram file.  ``lineno``/``colno`` are set for JSON syntax errors."""

    def __init__(self, msg: str, lineno: int | None = None, colno: int | None = None):
        self.lineno = lineno
        self.colno = colno
        super().__init__(msg)


@dataclass(frozen=True)
class PtolemyDiagram:
    """An N-gon with a set of diagonals.

    Construction does not check the Ptolemy condition, so that invalid
    inputs can be represented and reported by :func:`validate`.
    """

    N: int
    diagonals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        check_size(self.N)
        object.__setattr__(self, "diagonals", frozenset(self.diagonals))
        for d in self.diagonals:
            if not isinstance(d, Diagonal) or normalize(d.a, d.b, self.N) != d:
                raise PolygonError(f"{d!r} is not a normalized diagonal of the {self.N}-gon")

    @classmethod
    def from_pairs(cls, N: int, pairs: Iterable) -> "PtolemyDiagram":
        """Build from possibly unnormalized vertex pairs; duplicates are an error."""
        seen = set()
        for p in pairs:
            d = as_diagonal(p, N)
            if d in seen:
                raise PolygonError(f"duplicate diagonal {d}")
            seen.add(d)
        return cls(N, frozenset(seen))

    @cached_property
    def mask(self) -> int:
        return polygon_tables(self.N).mask(self.diagonals)

    def sorted(self) -> list[Diagonal]:
        return sorted(self.diagonals)

    def suspend(self) -> "PtolemyDiagram":
        return PtolemyDiagram(self.N, frozenset(suspend(d, self.N) for d in self.diagonals))

    def __str__(self):
        return f"N={self.N} " + " ".join(str(d) for d in self.sorted())


class CellKind(enum.Enum):
    EMPTY = "empty"
    CLIQUE = "clique"


@dataclass(frozen=True)
class Cell:
    """Vertices in anticlockwise (ascending) order."""

    vertices: tuple
    kind: CellKind

    def interior_diagonals(self) -> list[Diagonal]:
        v = self.vertices
        w = len(v)
        return [Diagonal(v[i], v[j]) for i, j in combinations(range(w), 2)
                if j - i not in (1, w - 1)]

    def has_interior(self, d: Diagonal) -> bool:
        v = self.vertices
        if d.a not in v or d.b not in v:
            return False
        gap = v.index(d.b) - v.index(d.a)
        return gap not in (1, len(v) - 1)

    def sides_of(self, d: Diagonal) -> tuple[int, int]:
        """Number of cell vertices strictly on each side of ``d``."""
        v = self.vertices
        gap = v.index(d.b) - v.index(d.a)
        return gap - 1, len(v) - gap - 1


@dataclass(frozen=True)
class Decomposition:
    dissecting: frozenset
    cells: tuple

    def cell_of(self, d: Diagonal) -> Cell | None:
        """The cell having ``d`` as an interior diagonal, if any."""
        for cell in self.cells:
            if cell.has_interior(d):
                return cell
        return None


def find_violation(d: PtolemyDiagram) -> ClosureViolation | None:
    """First crossing pair (in lexicographic order) with a missing hull chord."""
    ds = d.sorted()
    for x, y in combinations(ds, 2):
        if crosses(x, y):
            for h in hull_chords(x, y, d.N):
                if h not in d.diagonals:
                    return ClosureViolation(x, y, h)
    return None


def validate(d: PtolemyDiagram) -> None:
    """Raise :class:`ClosureViolation` unless ``d`` satisfies the Ptolemy condition."""
    v = find_violation(d)
    if v is not None:
        raise v


def is_ptolemy(d: PtolemyDiagram) -> bool:
    t = polygon_tables(d.N)
    return kernels.closure(len(t.diags), d.mask, t.pair_i, t.pair_j, t.pair_req) == d.mask


def ptolemy_closure(N: int, seed: Iterable[Diagonal]) -> PtolemyDiagram:
    """Smallest Ptolemy diagram containing ``seed``."""
    t = polygon_tables(N)
    m = kernels.closure(len(t.diags), t.mask(seed), t.pair_i, t.pair_j, t.pair_req)
    return PtolemyDiagram(N, frozenset(t.unmask(m)))


def _classify(vertices: tuple, diags: frozenset) -> Cell:
    cell = Cell(vertices, CellKind.EMPTY)
    interior = cell.interior_diagonals()
    present = sum(1 for x in interior if x in diags)
    if present == 0:
        return cell
    if present == len(interior):
        return Cell(vertices, CellKind.CLIQUE)
    raise StructureError(f"cell {vertices} holds {present} of its "
                         f"{len(interior)} interior diagonals")


def decompose(d: PtolemyDiagram) -> Decomposition:
    """Split ``d`` along its dissecting diagonals and classify the cells."""
    ds = d.sorted()
    dissecting = [x for x in ds if not any(crosses(x, y) for y in ds)]
    pieces = [tuple(range(1, d.N + 1))]
    for r in dissecting:
        for k, v in enumerate(pieces):
            if r.a in v and r.b in v:
                p, q = v.index(r.a), v.index(r.b)
                if q - p in (1, len(v) - 1):
                    continue
                pieces[k] = v[p:q + 1]
                pieces.append(tuple(sorted(v[q:] + v[:p + 1])))
                break
        else:  # pragma: no cover - dissecting diagonals never cross each other
            raise StructureError(f"no cell contains {r}")
    cells = tuple(sorted((_classify(v, d.diagonals) for v in pieces),
                         key=lambda c: c.vertices))
    dec = Decomposition(frozenset(dissecting), cells)
    covered = set(dissecting)
    for c in cells:
        if c.kind is CellKind.CLIQUE:
            covered.update(c.interior_diagonals())
    if covered != d.diagonals:
        raise StructureError("cells do not reproduce the diagonal set")
    return dec


def enumerate_ptolemy(N: int) -> Iterator[PtolemyDiagram]:
    """Every Ptolemy diagram on the N-gon, each exactly once, in lectic order."""
    check_size(N)
    if N > MAX_ENUMERATE_N:
        raise GuardError(f"refusing to enumerate Ptolemy diagrams for N={N} > {MAX_ENUMERATE_N}")
    t = polygon_tables(N)
    for m in kernels.enumerate_closed(len(t.diags), t.pair_i, t.pair_j, t.pair_req):
        yield PtolemyDiagram(N, frozenset(t.unmask(m)))


def is_triangulation(d: PtolemyDiagram) -> bool:
    ds = d.sorted()
    return (len(ds) == d.N - 3
            and not any(crosses(x, y) for x, y in combinations(ds, 2)))


# -- file format -----------------------------------------------------------

def parse_diagram(text: str) -> PtolemyDiagram:
    """Parse ``{"N": int, "diagonals": [[a, b], ...]}``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramFormatError(e.msg, e.lineno, e.colno) from None
    if not isinstance(obj, dict):
        raise DiagramFormatError("top level must be a JSON object")
    N = obj.get("N")
    if not isinstance(N, int) or isinstance(N, bool):
        raise DiagramFormatError('"N" must be an integer')
    pairs = obj.get("diagonals", [])
    if not isinstance(pairs, list):
        raise DiagramFormatError('"diagonals" must be a list')
    for k, p in enumerate(pairs):
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise DiagramFormatError(f"diagonals[{k}] must be a pair of integers")
    try:
        return PtolemyDiagram.from_pairs(N, pairs)
    except PolygonError as e:
        raise DiagramFormatError(str(e)) from None


def dump_diagram(d: PtolemyDiagram) -> str:
    return json.dumps({"N": d.N, "diagonals": [list(x) for x in d.sorted()]})
