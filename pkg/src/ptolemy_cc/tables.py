"""Per-polygon lookup tables shared by the bitmask kernels."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polygon import Diagonal, crosses, diagonals, normalize


@dataclass(frozen=True)
class PolygonTables:
    N: int
    diags: tuple[Diagonal, ...]
    index: dict
    cross: tuple[int, ...]       # cross[i]: mask of diagonals crossing diags[i]
    pair_i: tuple[int, ...]      # crossing pairs i < j ...
    pair_j: tuple[int, ...]
    pair_req: tuple[int, ...]    # ... and the diagonals they force

    def mask(self, ds) -> int:
        m = 0
        for d in ds:
            m |= 1 << self.index[d]
        return m

    def unmask(self, mask: int) -> list[Diagonal]:
        return [d for i, d in enumerate(self.diags) if mask >> i & 1]


def hull_chords(d1: Diagonal, d2: Diagonal, N: int) -> list[Diagonal]:
    """The four chords joining an endpoint of ``d1`` to one of ``d2``,
    keeping only those that are diagonals."""
    out = []
    for x in d1:
        for y in d2:
            c = normalize(x, y, N)
            if isinstance(c, Diagonal):
                out.append(c)
    return out


@lru_cache(maxsize=None)
def polygon_tables(N: int) -> PolygonTables:
    diags = tuple(diagonals(N))
    index = {d: i for i, d in enumerate(diags)}
    cross = []
    pi, pj, preq = [], [], []
    for i, d in enumerate(diags):
        m = 0
        for j, e in enumerate(diags):
            if crosses(d, e):
                m |= 1 << j
                if i < j:
                    pi.append(i)
                    pj.append(j)
                    preq.append(sum(1 << index[h] for h in hull_chords(d, e, N)))
        cross.append(m)
    return PolygonTables(N, diags, index, tuple(cross), tuple(pi), tuple(pj), tuple(preq))
