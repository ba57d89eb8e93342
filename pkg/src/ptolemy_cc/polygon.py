"""Cyclic vertex arithmetic on the N-gon.

Vertices are labelled 1..N and anticlockwise means increasing labels
(mod N).  A diagonal is stored normalized as ``Diagonal(a, b)`` with
``a < b``; chords that are polygon edges come back as :class:`Edge`
so callers can treat them as the zero object.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence, Union


class PolygonError(ValueError):
    """Bad vertex labels or polygon size."""


class Diagonal(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"{{{self.a},{self.b}}}"


class Edge(NamedTuple):
    """A side of the polygon, i.e. the zero object."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"edge{{{self.a},{self.b}}}"


Chord = Union[Diagonal, Edge]


def check_size(N: int) -> int:
    if not isinstance(N, int) or isinstance(N, bool) or N < 4:
        raise PolygonError(f"polygon size must be an integer >= 4, got {N!r}")
    return N


def wrap(x: int, N: int) -> int:
    """Reduce ``x`` into 1..N."""
    return (x - 1) % N + 1


def normalize(u: int, v: int, N: int) -> Chord:
    """Return the normalized chord joining vertices ``u`` and ``v``."""
    check_size(N)
    for x in (u, v):
        if not 1 <= x <= N:
            raise PolygonError(f"vertex {x} out of range 1..{N}")
    if u == v:
        raise PolygonError(f"degenerate chord {{{u},{v}}}")
    a, b = (u, v) if u < v else (v, u)
    if b - a in (1, N - 1):
        return Edge(a, b)
    return Diagonal(a, b)


def chord(u: int, v: int, N: int) -> Chord:
    """Like :func:`normalize` but accepts labels outside 1..N (taken mod N)."""
    return normalize(wrap(u, N), wrap(v, N), N)


def as_diagonal(pair: Sequence[int], N: int) -> Diagonal:
    """Normalize ``pair`` and insist that it is a diagonal."""
    u, v = pair
    c = normalize(u, v, N)
    if isinstance(c, Edge):
        raise PolygonError(f"{{{u},{v}}} is an edge of the {N}-gon, not a diagonal")
    return c


def diagonals(N: int) -> list[Diagonal]:
    """All N(N-3)/2 diagonals in lexicographic order."""
    check_size(N)
    return [Diagonal(a, b) for a, b in combinations(range(1, N + 1), 2)
            if 2 <= b - a <= N - 2]


def between(frm: int, x: int, to: int, N: int) -> bool:
    """True if ``x`` is met strictly after ``frm`` and strictly before ``to``
    when walking anticlockwise."""
    return 0 < (x - frm) % N < (to - frm) % N


def crosses(d1: Chord, d2: Chord) -> bool:
    """Do two chords cross in the interior of the polygon?"""
    a, b = d1
    c, d = d2
    if a in (c, d) or b in (c, d):
        return False
    return (a < c < b) != (a < d < b)


def suspend(d: Diagonal, N: int) -> Diagonal:
    """Rotate both endpoints by -1; this is the shift functor."""
    return chord(d.a - 1, d.b - 1, N)  # type: ignore[return-value]


def rotate(d: Diagonal, N: int, k: int = 1) -> Diagonal:
    """Rotate both endpoints by ``+k``."""
    return chord(d.a + k, d.b + k, N)  # type: ignore[return-value]


def cyclic_weakly_ordered(sequence: Sequence[int], N: int,
                          strict_positions: Iterable[int] = ()) -> bool:
    """Does one anticlockwise turn from ``sequence[0]`` meet the labels in order?

    Consecutive labels may coincide, except across the pairs
    ``(sequence[k], sequence[k+1])`` for ``k`` in ``strict_positions``.
    """
    if not sequence:
        raise ValueError("empty sequence")
    strict = set(strict_positions)
    start = sequence[0]
    prev = 0
    for k in range(1, len(sequence)):
        off = (sequence[k] - start) % N
        if off < prev or (off == prev and k - 1 in strict):
            return False
        prev = off
    return True


def arc(frm: int, to: int, N: int) -> Iterator[int]:
    """Labels from ``frm`` to ``to`` inclusive, walking anticlockwise."""
    x = frm
    while True:
        yield x
        if x == to:
            return
        x = wrap(x + 1, N)
