"""Random codimension-3 Gorenstein ideals as submaximal pfaffians of skew matrices.

For generator degrees ``d_1 <= ... <= d_{2n+1}`` with ``theta = sum/n``, the
skew matrix has entry ``(i, j)`` homogeneous of degree
``theta - d_i - d_j``; entries of degree ``<= 0`` are set to zero so the
resolution stays minimal.  The pfaffian of the matrix with row and column
``i`` removed is then homogeneous of degree ``d_i``.  Pfaffians are
recovered by evaluating the matrix at random points and interpolating.
"""

from __future__ import annotations

import numpy as np

from ..errors import NoConsistentDegreeMatrix, SamplingFailed
from ..gorenstein3 import DegreeSequence, gorenstein_betti_table, validate_degree_sequence
from .linalg import DEFAULT_P, solve
from .poly import GradedIdealFp, Poly, dim_R, evaluate, monomials, random_form, vector_to_poly
from .resolution import minimal_resolution_fp

MAX_RETRIES = 8


def pfaffian_mod(A: list[list[int]], p: int) -> int:
    """Pfaffian of a skew-symmetric matrix over ``F_p`` by block elimination."""
    n = len(A)
    if n % 2:
        return 0
    M = [[x % p for x in row] for row in A]
    result = 1
    for k in range(0, n, 2):
        piv = next((j for j in range(k + 1, n) if M[k][j]), None)
        if piv is None:
            return 0
        if piv != k + 1:
            M[k + 1], M[piv] = M[piv], M[k + 1]
            for row in M:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            result = -result
        a = M[k][k + 1]
        result = result * a % p
        inv = pow(a, p - 2, p)
        rk, rk1 = M[k], M[k + 1]
        for i in range(k + 2, n):
            ri = M[i]
            u, v = ri[k], ri[k + 1]
            if not (u or v):
                continue
            for j in range(k + 2, n):
                ri[j] = (ri[j] - (v * rk[j] - u * rk1[j]) * inv) % p
    return result % p


def pfaffian_expansion(A: list[list[int]], p: int) -> int:
    """Pfaffian by expansion along the first row (exponential; used as a check)."""
    n = len(A)
    if n == 0:
        return 1
    if n % 2:
        return 0
    total = 0
    for j in range(1, n):
        if A[0][j] % p:
            keep = [k for k in range(1, n) if k != j]
            sub = [[A[r][c] for c in keep] for r in keep]
            sign = 1 if j % 2 == 1 else -1
            total += sign * A[0][j] * pfaffian_expansion(sub, p)
    return total % p


def degree_matrix(delta: DegreeSequence, theta: int) -> list[list[int]]:
    """Entry degrees ``theta - d_i - d_j`` (diagonal unused)."""
    d = delta.degrees
    return [[theta - d[i] - d[j] for j in range(len(d))] for i in range(len(d))]


def random_skew_matrix(delta: DegreeSequence, theta: int, rng: np.random.Generator, p: int) -> list[list[Poly]]:
    degs = degree_matrix(delta, theta)
    size = len(delta)
    M: list[list[Poly]] = [[{} for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            if degs[i][j] > 0:
                f = random_form(degs[i][j], rng, p)
                M[i][j] = f
                M[j][i] = {e: (-c) % p for e, c in f.items()}
    return M


def submaximal_pfaffians(M: list[list[Poly]], delta: DegreeSequence, rng: np.random.Generator, p: int) -> list[Poly]:
    """Pfaffians of ``M`` with row/column ``i`` removed, for every ``i``."""
    size = len(M)
    top = max(delta.degrees)
    npts = dim_R(top) + 8
    points = rng.integers(0, p, size=(npts, 3))
    values = np.zeros((size, size, npts), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            if M[i][j]:
                values[i, j] = evaluate(M[i][j], points, p)
    gens = []
    for i, di in enumerate(delta.degrees):
        keep = [k for k in range(size) if k != i]
        pf = np.array(
            [pfaffian_mod([[int(values[r, c, t]) for c in keep] for r in keep], p) for t in range(npts)],
            dtype=np.int64,
        )
        gens.append(_interpolate(points, pf, di, p))
    return gens


def _interpolate(points: np.ndarray, values: np.ndarray, degree: int, p: int) -> Poly:
    mons = monomials(degree)
    V = np.ones((len(points), len(mons)), dtype=np.int64)
    for k, e in enumerate(mons):
        col = np.ones(len(points), dtype=np.int64)
        for v in range(3):
            for _ in range(int(e[v])):
                col = col * points[:, v] % p
        V[:, k] = col
    coeffs = solve(V, values, p)
    if coeffs is None:
        raise SamplingFailed("interpolation system is inconsistent")
    return vector_to_poly(coeffs, degree)


def _structurally_zero_pfaffians(degs: list[list[int]], rng: np.random.Generator, p: int) -> list[int]:
    """Indices whose submaximal pfaffian vanishes for every choice of positive-degree entries.

    Detected by evaluating on a random numeric matrix with the same zero
    pattern, twice, so a false alarm needs two independent zero hits.
    """
    size = len(degs)
    suspects = set(range(size))
    for _ in range(2):
        A = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                if degs[i][j] > 0:
                    a = int(rng.integers(1, p))
                    A[i][j], A[j][i] = a, p - a
        for i in list(suspects):
            keep = [k for k in range(size) if k != i]
            if pfaffian_mod([[A[r][c] for c in keep] for r in keep], p):
                suspects.discard(i)
    return sorted(suspects)


def pfaffian_gorenstein_sample(delta, seed: int, p: int = DEFAULT_P, verify: bool = True) -> GradedIdealFp:
    """Random Gorenstein ideal over ``F_p`` whose generators have degrees ``delta``.

    With ``n = 1`` three random forms are returned (a generic complete
    intersection).  Every candidate is checked by computing its minimal
    resolution; failures are resampled up to ``MAX_RETRIES`` times.
    """
    shape = validate_degree_sequence(delta.degrees if isinstance(delta, DegreeSequence) else delta)
    target = gorenstein_betti_table(shape)
    degs = degree_matrix(shape.delta, shape.theta)
    size = len(shape.delta)
    if shape.delta.n > 1:
        dead = _structurally_zero_pfaffians(degs, np.random.default_rng([seed, p]), p)
        if dead:
            raise NoConsistentDegreeMatrix(
                f"degree pattern for {shape.delta.degrees} forces the pfaffian of degree "
                f"{shape.delta.degrees[dead[0]]} to vanish"
            )
    for attempt in range(MAX_RETRIES):
        rng = np.random.default_rng([seed, attempt, p])
        if shape.delta.n == 1:
            gens = [random_form(d, rng, p) for d in shape.delta.degrees]
        else:
            M = random_skew_matrix(shape.delta, shape.theta, rng, p)
            gens = submaximal_pfaffians(M, shape.delta, rng, p)
        I = GradedIdealFp(gens, p)
        if not verify:
            return I
        if len(I.gens) == size and minimal_resolution_fp(I) == target:
            return I
    raise SamplingFailed(f"no sample for {shape.delta.degrees} matched the Gorenstein table in {MAX_RETRIES} tries")
