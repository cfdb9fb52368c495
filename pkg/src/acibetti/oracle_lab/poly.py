"""Homogeneous polynomials in ``x, y, z`` over ``F_p`` and graded ideals.

A polynomial is a dict ``{(a, b, c): coeff}``.  The degree-``j`` piece
``R_j`` has the monomial basis ordered by the exponent of ``x``
descending, then the exponent of ``y`` descending; ``monomial_index``
gives the position in closed form so multiplication by monomials is a
pure index computation.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from ..errors import AciError, NotArtinianWithinBound
from .linalg import DEFAULT_P, rref, reduce_rows

Poly = dict[tuple[int, int, int], int]

HARD_DEGREE_CAP = 24


def dim_R(j: int) -> int:
    return (j + 1) * (j + 2) // 2 if j >= 0 else 0


@lru_cache(maxsize=None)
def monomials(j: int) -> np.ndarray:
    """Exponent rows of ``R_j`` in basis order, shape ``(dim_R(j), 3)``."""
    rows = [(a, b, j - a - b) for a in range(j, -1, -1) for b in range(j - a, -1, -1)]
    return np.array(rows, dtype=np.int64).reshape(-1, 3)


def monomial_index(exps: np.ndarray, j: int) -> np.ndarray:
    """Positions in ``R_j`` of the exponent rows ``exps`` (all of degree ``j``)."""
    exps = np.asarray(exps, dtype=np.int64)
    a, b = exps[..., 0], exps[..., 1]
    k = j - a
    return k * (k + 1) // 2 + (k - b)


@lru_cache(maxsize=None)
def times_variable(j: int, v: int) -> np.ndarray:
    """Index in ``R_{j+1}`` of ``x_v * m`` for each monomial ``m`` of ``R_j``."""
    e = monomials(j).copy()
    e[:, v] += 1
    return monomial_index(e, j + 1)


def poly_degree(f: Poly) -> int:
    degs = {sum(e) for e in f}
    if len(degs) != 1:
        raise AciError(f"polynomial is zero or not homogeneous: degrees {sorted(degs)}")
    return degs.pop()


def normalize(f: Poly, p: int) -> Poly:
    out: Poly = {}
    for e, c in f.items():
        c %= p
        if c:
            out[tuple(int(x) for x in e)] = c  # type: ignore[index]
    return out


def poly_to_vector(f: Poly, p: int) -> np.ndarray:
    j = poly_degree(f)
    v = np.zeros(dim_R(j), dtype=np.int64)
    exps = np.array(list(f.keys()), dtype=np.int64)
    v[monomial_index(exps, j)] = np.array([c % p for c in f.values()], dtype=np.int64)
    return v


def vector_to_poly(v: np.ndarray, j: int) -> Poly:
    mons = monomials(j)
    return {tuple(int(x) for x in mons[i]): int(v[i]) for i in np.flatnonzero(v)}  # type: ignore[misc]


def multiples_matrix(f: Poly, target: int, p: int) -> np.ndarray:
    """Rows ``m * f`` in ``R_target`` for every monomial ``m`` of degree ``target - deg f``."""
    a = poly_degree(f)
    k = target - a
    if k < 0:
        return np.zeros((0, dim_R(target)), dtype=np.int64)
    mons = monomials(k)
    M = np.zeros((len(mons), dim_R(target)), dtype=np.int64)
    rows = np.arange(len(mons))
    for e, c in f.items():
        cols = monomial_index(mons + np.array(e, dtype=np.int64), target)
        M[rows, cols] = (M[rows, cols] + c) % p
    return M


def multiply(f: Poly, g: Poly, p: int) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def random_form(degree: int, rng: np.random.Generator, p: int) -> Poly:
    coeffs = rng.integers(0, p, size=dim_R(degree))
    return vector_to_poly(coeffs, degree)


def evaluate(f: Poly, points: np.ndarray, p: int) -> np.ndarray:
    """Values of ``f`` at the rows of ``points`` (shape ``(N, 3)``) in ``F_p``."""
    points = np.asarray(points, dtype=np.int64) % p
    out = np.zeros(len(points), dtype=np.int64)
    for e, c in f.items():
        term = np.full(len(points), c % p, dtype=np.int64)
        for v in range(3):
            for _ in range(e[v]):
                term = term * points[:, v] % p
        out = (out + term) % p
    return out


def poly_to_json(f: Poly) -> list:
    return [[int(c), list(e)] for e, c in sorted(f.items(), reverse=True)]


def poly_from_json(data: Iterable, p: int) -> Poly:
    f: Poly = {}
    for c, e in data:
        e = tuple(int(x) for x in e)
        if len(e) != 3:
            raise AciError(f"exponent {e} is not a triple")
        f[e] = (f.get(e, 0) + int(c)) % p  # type: ignore[index]
    return normalize(f, p)


class GradedIdealFp:
    """Homogeneous ideal of ``F_p[x, y, z]`` handled one graded piece at a time.

    ``piece(j)`` is the reduced row echelon basis of ``I_j`` inside ``R_j``
    and is built incrementally as ``R_1 * I_{j-1} + (generators of degree j)``.
    """

    def __init__(self, gens: Iterable[Poly], p: int = DEFAULT_P):
        self.p = p
        self.gens: list[Poly] = []
        for g in gens:
            g = normalize(g, p)
            if g:
                poly_degree(g)
                self.gens.append(g)
        self._pieces: dict[int, tuple[np.ndarray, list[int]]] = {}

    @property
    def generator_degrees(self) -> list[int]:
        return sorted(poly_degree(g) for g in self.gens)

    def piece(self, j: int) -> tuple[np.ndarray, list[int]]:
        if j < 0:
            return np.zeros((0, 0), dtype=np.int64), []
        if j in self._pieces:
            return self._pieces[j]
        lower = j - 1
        while lower >= 0 and lower not in self._pieces:
            lower -= 1
        for k in range(lower + 1, j + 1):
            self._pieces[k] = self._build(k)
        return self._pieces[j]

    def _build(self, j: int) -> tuple[np.ndarray, list[int]]:
        n = dim_R(j)
        blocks = []
        if j >= 1:
            R_prev, _ = self._pieces.get(j - 1, (np.zeros((0, dim_R(j - 1)), dtype=np.int64), []))
            if len(R_prev):
                for v in range(3):
                    M = np.zeros((len(R_prev), n), dtype=np.int64)
                    M[:, times_variable(j - 1, v)] = R_prev
                    blocks.append(M)
        for g in self.gens:
            if poly_degree(g) == j:
                blocks.append(poly_to_vector(g, self.p).reshape(1, n))
        if not blocks:
            return np.zeros((0, n), dtype=np.int64), []
        return rref(np.vstack(blocks), self.p)

    def dim(self, j: int) -> int:
        return len(self.piece(j)[1])

    def hilbert(self, j: int) -> int:
        """Hilbert function of ``R/I`` in degree ``j``."""
        return dim_R(j) - self.dim(j)

    def initial_degree(self) -> int:
        return min(self.generator_degrees) if self.gens else -1

    def socle_degree(self, cap: int = HARD_DEGREE_CAP) -> int:
        """Top degree with ``HF(R/I) > 0``; ``-1`` for the unit ideal."""
        for j in range(cap + 1):
            if self.hilbert(j) == 0:
                return j - 1
        raise NotArtinianWithinBound(f"R/I has nonzero Hilbert function through degree {cap}")

    def standard_indices(self, j: int) -> list[int]:
        piv = set(self.piece(j)[1])
        return [i for i in range(dim_R(j)) if i not in piv]

    def normal_form(self, V: np.ndarray, j: int) -> np.ndarray:
        R, piv = self.piece(j)
        return reduce_rows(np.atleast_2d(V), R, piv, self.p)

    def contains(self, f: Poly) -> bool:
        f = normalize(f, self.p)
        if not f:
            return True
        j = poly_degree(f)
        return not self.normal_form(poly_to_vector(f, self.p), j).any()

    def contains_ideal(self, other: GradedIdealFp) -> bool:
        return all(self.contains(g) for g in other.gens)

    def hilbert_values(self, upto: int) -> list[int]:
        return [self.hilbert(j) for j in range(upto + 1)]

    def linear_change(self, A: np.ndarray) -> GradedIdealFp:
        """Ideal obtained by substituting ``x_v -> sum_w A[v, w] x_w`` in every generator."""
        subs = [{(1, 0, 0): int(A[v, 0]), (0, 1, 0): int(A[v, 1]), (0, 0, 1): int(A[v, 2])} for v in range(3)]
        out = []
        for g in self.gens:
            total: Poly = {}
            for e, c in g.items():
                term: Poly = {(0, 0, 0): c}
                for v in range(3):
                    for _ in range(e[v]):
                        term = multiply(term, subs[v], self.p)
                for k, val in term.items():
                    total[k] = (total.get(k, 0) + val) % self.p
            out.append(normalize(total, self.p))
        return GradedIdealFp(out, self.p)

    def to_json(self) -> dict:
        return {"p": self.p, "gens": [poly_to_json(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict, p: int | None = None) -> GradedIdealFp:
        p = int(p if p is not None else data.get("p", DEFAULT_P))
        return cls([poly_from_json(g, p) for g in data["gens"]], p)

    @classmethod
    def from_monomials(cls, exps: Iterable[Iterable[int]], p: int = DEFAULT_P) -> GradedIdealFp:
        return cls([{tuple(int(x) for x in e): 1} for e in exps], p)  # type: ignore[misc]
