"""Monomial almost complete intersections in ``k[x, y, z]``.

Closed-form resolutions of ``(x^a1, y^a2, z^a3, x^b1 y^b2)`` and
``(x^a1, y^a2, z^a3, x^b1 y^b2 z^b3)``, monomial realizations of ACI shapes
of type 2 and 3, and an independent Betti-number oracle for arbitrary
monomial ideals built on the lcm lattice.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .aci3 import AciShape, ShapeDecomposition, Status, TieRule, check_characterization
from .betti_core import BettiTable, FreeModuleShifts
from .errors import (
    AciError,
    CharacterizationFailed,
    NotArtinian,
    NotRealizable,
    NotType2,
    NotType3,
    PreconditionViolation,
    TooManyGenerators,
)
from .exact_linalg import rank_rational

Exponent = tuple[int, int, int]

MAX_ORACLE_GENERATORS = 10


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(*monos: Exponent) -> Exponent:
    if not monos:
        return (0, 0, 0)
    return tuple(max(e) for e in zip(*monos))  # type: ignore[return-value]


@dataclass(frozen=True)
class MonomialIdeal3:
    """Minimal monomial generators in three variables, as exponent triples."""

    gens: tuple[Exponent, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted({tuple(int(e) for e in g) for g in self.gens}))
        for g in gens:
            if len(g) != 3 or min(g) < 0:
                raise AciError(f"bad exponent triple {g}")
        for g, h in combinations(gens, 2):
            if divides(g, h) or divides(h, g):
                raise AciError(f"generators {g} and {h} are not minimal")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_generators(cls, gens: Iterable[Iterable[int]]) -> MonomialIdeal3:
        """Build from any generating set, discarding redundant monomials."""
        pool = sorted({tuple(int(e) for e in g) for g in gens}, key=sum)
        kept: list[Exponent] = []
        for g in pool:
            if not any(divides(h, g) for h in kept):
                kept.append(g)  # type: ignore[arg-type]
        return cls(tuple(kept))

    @property
    def is_artinian(self) -> bool:
        pure = [False, False, False]
        for g in self.gens:
            support = [i for i in range(3) if g[i]]
            if len(support) == 1:
                pure[support[0]] = True
        return all(pure)

    def degrees(self) -> list[int]:
        return sorted(sum(g) for g in self.gens)

    def to_json(self) -> dict:
        return {"gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal3:
        return cls(tuple(tuple(g) for g in data["gens"]))

    def __str__(self) -> str:
        def mono(g):
            parts = [f"{v}^{e}" if e > 1 else v for v, e in zip("xyz", g) if e]
            return "*".join(parts) or "1"

        return "(" + ", ".join(mono(g) for g in self.gens) + ")"


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise PreconditionViolation(f"precondition fails: {what}")


def resolution_mont2(a1: int, a2: int, a3: int, b1: int, b2: int) -> BettiTable:
    """Minimal resolution of ``R/(x^a1, y^a2, z^a3, x^b1 y^b2)``."""
    _require(0 < b1 < a1, f"0 < b1 < a1 with b1={b1}, a1={a1}")
    _require(0 < b2 < a2, f"0 < b2 < a2 with b2={b2}, a2={a2}")
    _require(a3 > 0, f"a3 > 0 with a3={a3}")
    return BettiTable.from_lists(
        [a1, a2, a3, b1 + b2],
        [b1 + a2, a1 + b2, a1 + a3, a2 + a3, b1 + b2 + a3],
        [a1 + b2 + a3, b1 + a2 + a3],
    )


def resolution_mont3(a1: int, a2: int, a3: int, b1: int, b2: int, b3: int) -> BettiTable:
    """Minimal resolution of ``R/(x^a1, y^a2, z^a3, x^b1 y^b2 z^b3)``."""
    for i, (a, b) in enumerate(((a1, b1), (a2, b2), (a3, b3)), start=1):
        _require(0 < b < a, f"0 < b{i} < a{i} with b{i}={b}, a{i}={a}")
    return BettiTable.from_lists(
        [a1, a2, a3, b1 + b2 + b3],
        [b1 + b2 + a3, b1 + a2 + b3, a1 + b2 + b3, a1 + a2, a1 + a3, a2 + a3],
        [a1 + a2 + b3, a1 + b2 + a3, b1 + a2 + a3],
    )


def mont2_ideal(a1: int, a2: int, a3: int, b1: int, b2: int) -> MonomialIdeal3:
    return MonomialIdeal3(((a1, 0, 0), (0, a2, 0), (0, 0, a3), (b1, b2, 0)))


def mont3_ideal(a1: int, a2: int, a3: int, b1: int, b2: int, b3: int) -> MonomialIdeal3:
    return MonomialIdeal3(((a1, 0, 0), (0, a2, 0), (0, 0, a3), (b1, b2, b3)))


def mont3_v(a1: int, a2: int, a3: int, b1: int, b2: int, b3: int) -> tuple[int, int, int]:
    """``(v_1, v_2, v_3)`` with ``v_i = a_i + sum of the other b_j``; ``ord(v) = s``."""
    return (a1 + b2 + b3, b1 + a2 + b3, b1 + b2 + a3)


def realize_t2(shape: AciShape, check: bool = True) -> MonomialIdeal3:
    """Monomial ideal ``(x^d2, y^d3, z^d*, x^(s2-d3) y^(s1-d2))`` with the Betti table of ``shape``."""
    if shape.t != 2:
        raise NotType2(f"shape has t={shape.t}")
    if check:
        # the default p(d*) rule rejects genuine ACIs when d* ties d_2 or d_3
        verdict = check_characterization(ShapeDecomposition.from_shape(shape), tie_rule=TieRule.TIE_AWARE)
        if verdict.status is not Status.VALID:
            raise CharacterizationFailed(f"{verdict.status.value}: {verdict.reason}")
    _, d2, d3 = shape.d
    s1, s2 = shape.s
    b1, b2 = s2 - d3, s1 - d2
    if not (0 < b1 < d2 and 0 < b2 < d3):
        raise CharacterizationFailed(f"exponents ({b1}, {b2}) out of range for d2={d2}, d3={d3}")
    return mont2_ideal(d2, d3, shape.dstar, b1, b2)


@dataclass(frozen=True)
class Mon2Failure:
    index: int
    inequality: str


def mon2_failure(shape: AciShape) -> Mon2Failure | None:
    """First failing inequality of ``d* < s_i < d* + d_i``, or ``None``."""
    for i, (si, di) in enumerate(zip(shape.s, shape.d), start=1):
        if not shape.dstar < si:
            return Mon2Failure(i, f"s{i}={si} <= d*={shape.dstar}")
        if not si < shape.dstar + di:
            return Mon2Failure(i, f"s{i}={si} >= d*+d{i}={shape.dstar + di}")
    return None


def realize_t3(shape: AciShape) -> MonomialIdeal3:
    """Monomial ideal ``(x^d1, y^d2, z^d3, x^(d*+d1-s1) y^(d*+d2-s2) z^(d*+d3-s3))``.

    Raises :class:`NotRealizable` naming the first failing inequality of
    ``d* < s_i < d* + d_i``.
    """
    if shape.t != 3:
        raise NotType3(f"shape has t={shape.t}")
    failure = mon2_failure(shape)
    if failure is not None:
        raise NotRealizable(failure.inequality)
    b = tuple(shape.dstar + di - si for di, si in zip(shape.d, shape.s))
    if not all(0 < bi < di for bi, di in zip(b, shape.d)):
        raise NotRealizable(f"mixed exponents {b} do not give four minimal generators")
    return mont3_ideal(*shape.d, *b)


def _reduced_homology_dims(faces_by_size: dict[int, list[tuple[int, ...]]], top: int) -> list[int]:
    """Reduced homology dims ``H~_k`` for ``k = -1..top`` of a simplicial complex.

    ``faces_by_size[q]`` lists faces with ``q`` vertices; size 0 is the
    empty face.  Only faces with at most ``top + 2`` vertices are needed.
    """
    index = {q: {f: i for i, f in enumerate(faces_by_size.get(q, []))} for q in range(top + 3)}

    def boundary_rank(q: int) -> int:
        # boundary from faces with q vertices to faces with q-1 vertices
        rows = []
        lower = index.get(q - 1, {})
        for f in faces_by_size.get(q, []):
            row = [0] * len(lower)
            for pos in range(len(f)):
                row[lower[f[:pos] + f[pos + 1:]]] = (-1) ** pos
            rows.append(row)
        if not rows or not lower:
            return 0
        return rank_rational(rows)

    ranks = {q: boundary_rank(q) for q in range(1, top + 3)}
    dims = []
    for k in range(-1, top + 1):
        q = k + 1
        n = len(faces_by_size.get(q, []))
        dims.append(n - ranks.get(q, 0) - ranks.get(q + 1, 0))
    return dims


def multigraded_betti(J: MonomialIdeal3) -> dict[int, Counter]:
    """Multigraded Betti numbers ``beta_{i,m}`` of ``R/J`` for ``i = 1..3``.

    ``beta_{i,m} = dim H~_{i-2}(K_{<m})`` where ``K_{<m}`` is the complex of
    generator subsets whose lcm strictly divides ``m``; ``m`` runs over the
    lcm lattice.  Ranks are computed exactly over the rationals.
    """
    gens = J.gens
    lattice = {lcm(*S) for r in range(1, len(gens) + 1) for S in combinations(gens, r)}
    out: dict[int, Counter] = {1: Counter(), 2: Counter(), 3: Counter()}
    for m in lattice:
        below = [i for i, g in enumerate(gens) if divides(g, m)]
        faces: dict[int, list[tuple[int, ...]]] = {}
        for q in range(0, 4):
            faces[q] = [S for S in combinations(below, q) if lcm(*(gens[i] for i in S)) != m]
        dims = _reduced_homology_dims(faces, top=1)
        for i in (1, 2, 3):
            b = dims[i - 1]
            if b:
                out[i][m] += b
    return out


def minimal_resolution_oracle(J: MonomialIdeal3, require_artinian: bool = True) -> BettiTable:
    """Graded Betti table of ``R/J`` computed from the lcm lattice."""
    if len(J.gens) > MAX_ORACLE_GENERATORS:
        raise TooManyGenerators(f"{len(J.gens)} generators, limit {MAX_ORACLE_GENERATORS}")
    if require_artinian and not J.is_artinian:
        raise NotArtinian(f"{J} lacks a pure power of some variable")
    betti = multigraded_betti(J)
    mods = [FreeModuleShifts(sum(m) for m, k in betti[i].items() for _ in range(k)) for i in (1, 2, 3)]
    return BettiTable(3, tuple(mods))


def mont2_parameters(max_exponent: int):
    """All ``(a1, a2, a3, b1, b2)`` with ``a_i <= max_exponent`` satisfying the bounds."""
    rng = range(1, max_exponent + 1)
    for a1 in rng:
        for a2 in rng:
            for a3 in rng:
                for b1 in range(1, a1):
                    for b2 in range(1, a2):
                        yield (a1, a2, a3, b1, b2)


def mont3_parameters(max_exponent: int):
    rng = range(1, max_exponent + 1)
    for a1 in rng:
        for a2 in rng:
            for a3 in rng:
                for b1 in range(1, a1):
                    for b2 in range(1, a2):
                        for b3 in range(1, a3):
                            yield (a1, a2, a3, b1, b2, b3)
