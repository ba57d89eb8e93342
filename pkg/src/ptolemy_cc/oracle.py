"""Independent recomputation of rho by counting subfunctor supports.

For a probe diagonal ``c`` the support is the set of diagram diagonals
crossing ``c``.  A subfunctor is a subset of the support that is closed
downward: whenever it contains ``r`` and some ``s -> r -> shift(c)`` has
nonzero composite, it contains ``s``.  Nonzero composites are read off
from the endpoint chain

    s0 <= r0 <= c0-1 <= s1-2 <= s1 <= r1 <= c1-1 <= s0-2

taken anticlockwise around the polygon, over every labelling of the
three pairs of endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from . import kernels
from .diagram import GuardError, PtolemyDiagram
from .polygon import Diagonal, crosses, cyclic_weakly_ordered, wrap
from .tables import polygon_tables

MAX_SUPPORT = 25


@dataclass(frozen=True)
class SupportSet:
    c: Diagonal
    members: frozenset


@dataclass(frozen=True)
class CompositeRelation:
    c: Diagonal
    pairs: frozenset    # (s, r): some s -> r -> shift(c) has nonzero composite


@dataclass(frozen=True)
class StaircaseRectangle:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"negative side length in {self}")


def support(c: Diagonal, d: PtolemyDiagram) -> SupportSet:
    return SupportSet(c, frozenset(x for x in d.diagonals if crosses(x, c)))


def composite_nonzero(s: Diagonal, r: Diagonal, c: Diagonal, N: int) -> bool:
    if not (crosses(s, c) and crosses(r, c)):
        raise ValueError(f"{s} and {r} must both cross {c}")
    for (s0, s1), (r0, r1), (c0, c1) in product((s, s[::-1]), (r, r[::-1]), (c, c[::-1])):
        chain = [s0, r0, c0 - 1, s1 - 2, s1, r1, c1 - 1, s0 - 2]
        if cyclic_weakly_ordered([wrap(x, N) for x in chain], N):
            return True
    return False


def composite_relation(c: Diagonal, d: PtolemyDiagram) -> CompositeRelation:
    sup = sorted(support(c, d).members)
    return CompositeRelation(c, frozenset(
        (s, r) for s in sup for r in sup if composite_nonzero(s, r, c, d.N)))


@lru_cache(maxsize=None)
def _preds(N: int, c: Diagonal) -> tuple[int, ...]:
    """preds[r] = mask of s with s -> r -> shift(c) nonzero, over all diagonals."""
    t = polygon_tables(N)
    crossing = [i for i, x in enumerate(t.diags) if crosses(x, c)]
    preds = [0] * len(t.diags)
    for ri in crossing:
        for si in crossing:
            if composite_nonzero(t.diags[si], t.diags[ri], c, N):
                preds[ri] |= 1 << si
    return tuple(preds)


def count_subfunctors(c: Diagonal, d: PtolemyDiagram, max_support: int = MAX_SUPPORT) -> int:
    """Number of down-closed subsets of the support of ``c``."""
    t = polygon_tables(d.N)
    if c not in t.index:
        raise ValueError(f"{c!r} is not a diagonal of the {d.N}-gon")
    sup = t.cross[t.index[c]] & d.mask
    members = [i for i in range(len(t.diags)) if sup >> i & 1]
    if len(members) > max_support:
        raise GuardError(f"support of {c} has {len(members)} > {max_support} members")
    preds = _preds(d.N, c)
    # reindex the relation onto the support
    local = [sum(1 << k for k, s in enumerate(members) if preds[r] >> s & 1)
             for r in members]
    return kernels.count_downsets(local)


def staircase_count(rect: StaircaseRectangle) -> int:
    """Count down/right lattice paths across an a-by-b rectangle."""
    row = [1] * (rect.b + 1)
    for _ in range(rect.a):
        for j in range(1, rect.b + 1):
            row[j] += row[j - 1]
    return row[rect.b]


def narayana(n: int, k: int) -> Fraction:
    return Fraction(comb(n, k) * comb(n + 1, k), k + 1)


def narayana_identity_check(n: int, k: int) -> bool:
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    return narayana(n, k) == comb(n, k) ** 2 - comb(n, k - 1) * comb(n, k + 1)
