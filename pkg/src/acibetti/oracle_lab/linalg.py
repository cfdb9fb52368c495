"""Dense linear algebra over a prime field ``F_p`` on int64 numpy arrays.

Entries are kept in ``[0, p)``; with ``p < 2**31`` every product fits in
int64, and row operations reduce after each multiply.
"""

from __future__ import annotations

import numpy as np

DEFAULT_P = 32003


def as_mod(A, p: int) -> np.ndarray:
    return np.asarray(A, dtype=np.int64) % p


def rref(A, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``A`` over ``F_p``.

    Returns the nonzero rows (each with pivot 1 and zeros in the other
    pivot columns) and the list of pivot columns.
    """
    M = as_mod(A, p).copy()
    if M.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit] = (M[hit] - np.outer(col[hit], M[r]) % p) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : A x = 0}`` over ``F_p``."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(piv):
            basis[k, pc] = (-R[row, f]) % p
    return basis


def reduce_rows(V: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Normal forms of the rows of ``V`` modulo the row space of an rref ``R``."""
    V = as_mod(V, p)
    if not pivots or V.size == 0:
        return V
    coeff = V[:, pivots]
    return (V - (coeff @ R) % p) % p


def solve(A, b, p: int) -> np.ndarray | None:
    """One solution ``x`` of ``A x = b`` over ``F_p`` or ``None``."""
    A = as_mod(A, p)
    b = as_mod(b, p).reshape(-1, 1)
    R, piv = rref(np.hstack([A, b]), p)
    n = A.shape[1]
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for row, pc in enumerate(piv):
        x[pc] = R[row, n]
    return x
