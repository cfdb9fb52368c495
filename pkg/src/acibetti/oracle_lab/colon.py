"""Colon ideals ``Z : Q`` computed degree by degree over ``F_p``."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..errors import BoundTooSmall, NotContained
from .linalg import nullspace, rref, reduce_rows
from .poly import HARD_DEGREE_CAP, GradedIdealFp, dim_R, multiples_matrix, poly_degree, times_variable, vector_to_poly


def colon_piece(Z: GradedIdealFp, Q: GradedIdealFp, j: int) -> np.ndarray:
    """Basis rows of ``(Z : Q)_j``: forms ``g`` of degree ``j`` with ``g q in Z`` for each generator ``q``."""
    p = Z.p
    n = dim_R(j)
    blocks = []
    for q in Q.gens:
        target = j + poly_degree(q)
        # row m of the block is the normal form of m*q modulo Z
        images = multiples_matrix(q, target, p)
        nf = Z.normal_form(images, target)
        std = Z.standard_indices(target)
        blocks.append(nf[:, std])
    if not blocks:
        return np.eye(n, dtype=np.int64)
    M = np.hstack(blocks)
    return nullspace(M.T, p)


def colon_ideal(Z: GradedIdealFp, Q: GradedIdealFp, degree_bound: Optional[int] = None) -> GradedIdealFp:
    """``Z : Q`` with a minimal set of homogeneous generators.

    ``Z`` must be contained in ``Q`` and ``R/Z`` artinian.  Past the socle
    degree of ``R/Z`` every form lies in the colon, so the computation
    stops at ``socle(Z) + 1`` unless a smaller bound is given, which is an
    error.
    """
    if Z.p != Q.p:
        raise ValueError("ideals live over different primes")
    if not Q.contains_ideal(Z):
        raise NotContained("Z is not contained in Q")
    p = Z.p
    socle = Z.socle_degree(HARD_DEGREE_CAP)
    needed = socle + 1
    if degree_bound is not None and degree_bound < needed:
        raise BoundTooSmall(f"bound {degree_bound} below socle(Z) + 1 = {needed}")
    gens = []
    prev: Optional[np.ndarray] = None
    for j in range(0, needed + 1):
        C = colon_piece(Z, Q, j) if j <= socle else np.eye(dim_R(j), dtype=np.int64)
        if prev is not None and len(prev):
            blocks = []
            for v in range(3):
                M = np.zeros((len(prev), dim_R(j)), dtype=np.int64)
                M[:, times_variable(j - 1, v)] = prev
                blocks.append(M)
            span, piv = rref(np.vstack(blocks), p)
        else:
            span, piv = np.zeros((0, dim_R(j)), dtype=np.int64), []
        for row in C:
            red = reduce_rows(row.reshape(1, -1), span, piv, p)[0] if piv else row % p
            if red.any():
                gens.append(vector_to_poly(red, j))
                span, piv = rref(np.vstack([span, red.reshape(1, -1)]), p)
        prev = span
        if len(piv) == dim_R(j):
            break
    return GradedIdealFp(gens, p)
