"""Frieze bands: rho values laid out on the AR quiver, with diamond determinants.

``entry(i, w)`` is the value on the chord ``{i, i+w}``; rows ``w = 1`` and
``w = N-1`` are edges and hold 1.  In the quiver picture the chord
``{i, i+w}`` sits in row ``w`` at horizontal position ``2i + w``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import NamedTuple

from .ccmap import RhoTable
from .polygon import check_size, wrap


@dataclass(frozen=True)
class FriezeBand:
    N: int
    entries: dict    # (i, w) -> value for i in 1..N, w in 1..N-1

    def entry(self, i: int, w: int) -> int:
        if not 1 <= w <= self.N - 1:
            raise IndexError(f"row {w} outside 1..{self.N - 1}")
        return self.entries[wrap(i, self.N), w]

    def row(self, w: int, start: int = 1, length: int | None = None) -> list[int]:
        length = self.N if length is None else length
        return [self.entry(start + k, w) for k in range(length)]


class DiamondReport(NamedTuple):
    i: int
    w: int
    determinant: int


def build_band(table: RhoTable) -> FriezeBand:
    N = table.N
    return FriezeBand(N, {(i, w): table[(i, i + w)]
                          for i in range(1, N + 1) for w in range(1, N)})


def diamond_determinants(band: FriezeBand) -> list[DiamondReport]:
    """``ad - bc`` for left ``{i,i+w}``, right ``{i+1,i+w+1}``, top
    ``{i,i+w+1}`` and bottom ``{i+1,i+w}``."""
    e = band.entry
    return [DiamondReport(i, w, e(i, w) * e(i + 1, w) - e(i, w + 1) * e(i + 1, w - 1))
            for w in range(2, band.N - 1) for i in range(1, band.N + 1)]


def _text(band: FriezeBand, periods: int) -> str:
    N = band.N
    width = max(len(str(v)) for v in band.entries.values())
    half = (width + 1) // 2
    lines = []
    for w in range(N - 1, 0, -1):
        # start so that every row covers the same horizontal window
        start = 1 - w // 2
        cells = [str(band.entry(start + k, w)).rjust(width) for k in range(N * periods)]
        lines.append((" " * half if w % 2 else "") + " ".join(cells))
    return "\n".join(lines) + "\n"


def band_to_json(band: FriezeBand, periods: int = 1) -> dict:
    return {
        "N": band.N,
        "rows": [band.row(w, 1, band.N * periods) for w in range(1, band.N)],
        "determinants": [{"i": r.i, "w": r.w, "determinant": r.determinant}
                         for r in diamond_determinants(band)],
    }


def band_from_json(obj: dict) -> FriezeBand:
    N = check_size(obj["N"])
    rows = obj["rows"]
    return FriezeBand(N, {(i, w): rows[w - 1][i - 1]
                          for i in range(1, N + 1) for w in range(1, N)})


def _csv(band: FriezeBand) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["i", "w", "value"])
    for w in range(1, band.N):
        for i in range(1, band.N + 1):
            out.writerow([i, w, band.entry(i, w)])
    out.writerow([])
    out.writerow(["i", "w", "determinant"])
    for r in diamond_determinants(band):
        out.writerow([r.i, r.w, r.determinant])
    return buf.getvalue()


def render(band: FriezeBand, fmt: str = "text", periods: int = 1) -> str:
    if periods < 1:
        raise ValueError("periods must be >= 1")
    if fmt == "text":
        return _text(band, periods)
    if fmt == "json":
        return json.dumps(band_to_json(band, periods), sort_keys=True) + "\n"
    if fmt == "csv":
        return _csv(band)
    raise ValueError(f"unknown format {fmt!r}")


def locate_pattern(band: FriezeBand, rows) -> int | None:
    """Find a horizontal shift placing a printed quiver fragment on the band.

    ``rows`` holds ``(w, column, values)`` triples: ``values`` sit in row
    ``w`` at columns ``column, column + 2, ...``.  Returns the smallest
    shift ``s`` such that column ``x`` is quiver position ``x + s`` for
    every row at once, or None.
    """
    for s in range(2 * band.N):
        ok = True
        for w, col, values in rows:
            if (col + s - w) % 2:
                ok = False
                break
            i0 = (col + s - w) // 2
            if [band.entry(i0 + k, w) for k in range(len(values))] != list(values):
                ok = False
                break
        if ok:
            return s
    return None


def row_contains_cyclic(band: FriezeBand, w: int, values) -> bool:
    """Is ``values`` a run of consecutive entries of row ``w`` (cyclically)?"""
    values = list(values)
    return any(band.row(w, start, len(values)) == values
               for start in range(1, band.N + 1))
