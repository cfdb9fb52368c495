"""Exact rank over the rationals by fraction-based row reduction."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer or rational matrix given as a list of rows."""
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                f *= inv
                row = m[r]
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] -= f * prow[c]
        rank += 1
        if rank == len(m):
            break
    return rank
