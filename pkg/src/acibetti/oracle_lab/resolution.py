"""Graded Betti numbers of an artinian ``R/I`` over ``F_p`` from Koszul homology.

``Tor_i(R/I, k)_j`` is the homology at ``Lambda^i k^3 (x) (R/I)_{j-i}`` of the
Koszul complex on ``x, y, z`` tensored with ``R/I``.  Only multiplication
maps between graded pieces of ``R/I`` are needed, and these come from
normal forms modulo the pieces ``I_j``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

import numpy as np

from ..betti_core import BettiTable, FreeModuleShifts
from ..errors import BoundTooSmall, NotArtinianWithinBound
from .linalg import rank
from .poly import HARD_DEGREE_CAP, GradedIdealFp, times_variable

_SUBSETS = {i: list(combinations(range(3), i)) for i in range(4)}


class _Quotient:
    """Multiplication maps ``x_v : (R/I)_k -> (R/I)_{k+1}`` in standard-monomial bases."""

    def __init__(self, I: GradedIdealFp, top: int):
        self.I = I
        self.top = top
        self.std = {k: I.standard_indices(k) for k in range(top + 2)}
        self._mul: dict[tuple[int, int], np.ndarray] = {}

    def dim(self, k: int) -> int:
        if k < 0 or k > self.top + 1:
            return 0
        return len(self.std[k])

    def mul(self, v: int, k: int) -> np.ndarray:
        """Matrix of shape ``(dim A_{k+1}, dim A_k)``."""
        key = (v, k)
        if key not in self._mul:
            src, dst = self.dim(k), self.dim(k + 1)
            if src == 0 or dst == 0:
                M = np.zeros((dst, src), dtype=np.int64)
            else:
                n_next = len(times_variable(k + 1, 0))
                images = np.zeros((src, n_next), dtype=np.int64)
                idx = times_variable(k, v)[self.std[k]]
                images[np.arange(src), idx] = 1
                nf = self.I.normal_form(images, k + 1)
                M = nf[:, self.std[k + 1]].T.copy()
            self._mul[key] = M
        return self._mul[key]


def _koszul_differential(A: _Quotient, i: int, j: int, p: int) -> np.ndarray:
    """``d_i : Lambda^i (x) A_{j-i} -> Lambda^{i-1} (x) A_{j-i+1}``."""
    src_k, dst_k = j - i, j - i + 1
    ds, dd = A.dim(src_k), A.dim(dst_k)
    rows_S = _SUBSETS[i - 1]
    cols_S = _SUBSETS[i]
    M = np.zeros((len(rows_S) * dd, len(cols_S) * ds), dtype=np.int64)
    if ds == 0 or dd == 0:
        return M
    row_of = {S: r for r, S in enumerate(rows_S)}
    for c, S in enumerate(cols_S):
        for pos, v in enumerate(S):
            T = S[:pos] + S[pos + 1:]
            r = row_of[T]
            block = A.mul(v, src_k)
            sign = 1 if pos % 2 == 0 else p - 1
            M[r * dd:(r + 1) * dd, c * ds:(c + 1) * ds] = (block * sign) % p
    return M


def betti_numbers_fp(I: GradedIdealFp, top: int) -> dict[int, dict[int, int]]:
    """``beta[i][j]`` of ``R/I`` for ``0 <= i <= 3``, given ``A_k = 0`` for ``k > top``."""
    A = _Quotient(I, top)
    p = I.p
    betti: dict[int, dict[int, int]] = {i: {} for i in range(4)}
    for j in range(0, top + 4):
        ranks = {}
        for i in range(1, 4):
            M = _koszul_differential(A, i, j, p)
            ranks[i] = rank(M, p) if M.size else 0
        for i in range(4):
            dim_K = len(_SUBSETS[i]) * A.dim(j - i)
            b = dim_K - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if b:
                betti[i][j] = b
    return betti


def minimal_resolution_fp(I: GradedIdealFp, degree_bound: Optional[int] = None) -> BettiTable:
    """Minimal graded Betti table of the artinian algebra ``R/I`` over ``F_p``.

    ``degree_bound`` must reach the socle degree plus 3; by default the
    socle degree is found from the Hilbert function (capped at 24).
    """
    cap = HARD_DEGREE_CAP if degree_bound is None else min(degree_bound, HARD_DEGREE_CAP)
    try:
        socle = I.socle_degree(cap)
    except NotArtinianWithinBound:
        raise NotArtinianWithinBound(f"Hilbert function of R/I does not vanish by degree {cap}") from None
    if degree_bound is not None and degree_bound < socle + 3:
        raise BoundTooSmall(f"bound {degree_bound} < socle degree {socle} + 3")
    betti = betti_numbers_fp(I, max(socle, 0))
    mods = [
        FreeModuleShifts(j for j, b in sorted(betti[i].items()) for _ in range(b))
        for i in (1, 2, 3)
    ]
    return BettiTable(3, tuple(mods))
