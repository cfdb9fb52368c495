"""Recognition and characterization of codimension-3 ACI Betti tables.

An almost complete intersection (ACI) ``R/I_Q`` in three variables has
four minimal generators: three of degrees ``d_1 <= d_2 <= d_3`` spanning a
complete intersection and one extra form of degree ``d*``.  Its minimal
resolution has the shape::

    0 -> (+) R(-(d - s_i)) -> F_2' (+) (+) R(-s_i) -> R(-d*) (+) (+) R(-d_i) -> R

with ``d = d_1 + d_2 + d_3 + d*`` and ``F_2'`` determined by the parity of
the Cohen-Macaulay type ``t``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .betti_core import BettiTable, FreeModuleShifts, dual_twist, subtract
from .errors import (
    AciError,
    DstarNotAGenerator,
    DualNotEmbedded,
    F2PrimeMismatch,
    LinkedSequenceInvalid,
    NonIntegralDstar,
    NonPositiveDstar,
    NotAciRanks,
    NotMinimal,
    NotSubmodule,
    SumIdentityViolation,
)
from .gorenstein3 import DegreeSequence, MinProvider, ci_min_provider, min_ci, ord_, validate_degree_sequence


@dataclass(frozen=True)
class AciShape:
    """Canonical data ``(d_1, d_2, d_3; d*; s_1..s_t)`` of an ACI resolution."""

    d: tuple[int, int, int]
    dstar: int
    s: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", ord_(self.d))
        object.__setattr__(self, "s", ord_(self.s))
        if len(self.d) != 3:
            raise AciError(f"need three CI degrees, got {self.d}")
        if min(self.d) < 1 or self.dstar < 1:
            raise AciError("generator degrees must be positive")
        if self.t < 2:
            raise AciError(f"Cohen-Macaulay type must be at least 2, got {self.t}")
        if any(self.dtotal - si < 3 for si in self.s):
            raise AciError(f"tail shift d - s_i below 3 for s={self.s}, d={self.dtotal}")

    @property
    def t(self) -> int:
        return len(self.s)

    @property
    def even(self) -> bool:
        return self.t % 2 == 0

    @property
    def dtotal(self) -> int:
        return sum(self.d) + self.dstar

    @property
    def sQ(self) -> int:
        return sum(self.s)

    @property
    def expected_sQ(self) -> int:
        """Sum of the ``s_i`` forced by the vanishing of the shift alternating sum."""
        if self.even:
            return (self.t // 2) * self.dtotal - self.dstar
        return ((self.t - 1) // 2) * self.dtotal + self.dstar

    @property
    def sum_identity_holds(self) -> bool:
        return self.sQ == self.expected_sQ

    @property
    def u(self) -> int:
        return self.f2_prime.total

    @property
    def f2_prime(self) -> FreeModuleShifts:
        d1, d2, d3 = self.d
        if self.even:
            return FreeModuleShifts(di + self.dstar for di in self.d)
        return FreeModuleShifts((d1 + d2, d1 + d3, d2 + d3))

    @property
    def sprime(self) -> tuple[int, ...]:
        d1, d2, d3 = self.d
        if self.even:
            return ord_((self.dstar + d1, *self.s))
        return ord_((d1 + d2, d1 + d3, *self.s))

    @property
    def p(self) -> int:
        _, d2, d3 = self.d
        if self.dstar <= d2:
            return 1
        if self.dstar <= d3:
            return 2
        return 3

    @property
    def e(self) -> tuple[int, int, int]:
        return ord_((self.dstar, self.d[1], self.d[2]))

    def betti_table(self) -> BettiTable:
        """The Betti table determined by this shape."""
        F1 = FreeModuleShifts((*self.d, self.dstar))
        F2 = FreeModuleShifts((*self.f2_prime.shifts, *self.s))
        F3 = FreeModuleShifts(self.dtotal - si for si in self.s)
        return BettiTable(3, (F1, F2, F3))

    def to_json(self) -> dict:
        return {"d": list(self.d), "dstar": self.dstar, "s": list(self.s), "t": self.t}


@dataclass(frozen=True)
class ShapeDecomposition:
    shape: AciShape
    f2_dual_part: FreeModuleShifts
    f2_prime: FreeModuleShifts
    sprime: tuple[int, ...]
    p: int
    e: tuple[int, int, int]
    table: Optional[BettiTable] = field(default=None, compare=False)

    @classmethod
    def from_shape(cls, shape: AciShape) -> ShapeDecomposition:
        """Derived data of ``shape`` without any check against a table."""
        return cls(
            shape=shape,
            f2_dual_part=FreeModuleShifts(shape.s),
            f2_prime=shape.f2_prime,
            sprime=shape.sprime,
            p=shape.p,
            e=shape.e,
        )

    def to_json(self) -> dict:
        out = self.shape.to_json()
        out.update(
            u=self.shape.u,
            dtotal=self.shape.dtotal,
            f2_prime=list(self.f2_prime.shifts),
            sprime=list(self.sprime),
            p=self.p,
            e=list(self.e),
        )
        return out


class DstarInfo(NamedTuple):
    dstar: int
    u: int
    t: int
    dtotal: int


def extract_dstar(B: BettiTable) -> DstarInfo:
    """Read ``d*`` off an ACI Betti table using only shift sums.

    ``u = s_(2) + s_(3) - t*d`` and ``d* = (u - d)/2`` for even ``t``,
    ``d* = (2d - u)/2`` for odd ``t``.
    """
    if B.codim != 3:
        raise NotAciRanks(f"codim is {B.codim}, not 3")
    F1, F2, F3 = B.modules
    t = F3.rank
    if F1.rank != 4 or F2.rank != t + 3:
        raise NotAciRanks(f"ranks {B.ranks} are not of the form (4, t+3, t)")
    d = F1.total
    u = F2.total + F3.total - t * d
    twice = u - d if t % 2 == 0 else 2 * d - u
    if twice % 2:
        raise NonIntegralDstar(f"d* = {twice}/2 is not an integer (t={t}, d={d}, u={u})")
    dstar = twice // 2
    if dstar <= 0:
        raise NonPositiveDstar(f"d* = {dstar}")
    return DstarInfo(dstar, u, t, d)


def split_dual_part(B: BettiTable, d: int) -> tuple[FreeModuleShifts, FreeModuleShifts]:
    """Split ``F_2 = F_c^v(-d) (+) F_2'``; raise if the dual is not embedded."""
    dual = dual_twist(B.modules[-1], d)
    try:
        rest = subtract(B.F(2), dual)
    except NotSubmodule as exc:
        raise DualNotEmbedded(f"F_{B.codim}^v(-{d}) = {list(dual.shifts)} is not inside F_2: {exc}") from None
    return dual, rest


def _first_difference(a: FreeModuleShifts, b: FreeModuleShifts) -> int:
    extra = (a.counts() - b.counts()) + (b.counts() - a.counts())
    return min(extra)


def decompose(B: BettiTable) -> ShapeDecomposition:
    """Recover the ACI shape of ``B`` and verify every structural claim."""
    if not B.is_minimal:
        raise NotMinimal(f"table is tagged {B.status.value}")
    info = extract_dstar(B)
    d = info.dtotal
    dual, f2_prime = split_dual_part(B, d)
    F1 = B.F(1)
    if info.dstar not in F1:
        raise DstarNotAGenerator(f"d*={info.dstar} is not a generator degree in {list(F1.shifts)}")
    ci = subtract(F1, FreeModuleShifts.of(info.dstar)).shifts
    s = tuple(d - g for g in B.F(3).shifts)
    shape = AciShape(ci, info.dstar, s)
    if f2_prime != shape.f2_prime:
        bad = _first_difference(f2_prime, shape.f2_prime)
        raise F2PrimeMismatch(
            f"F_2' = {list(f2_prime.shifts)} but parity t={info.t} prescribes "
            f"{list(shape.f2_prime.shifts)} (first differing shift {bad})"
        )
    if not shape.sum_identity_holds:
        raise SumIdentityViolation(f"sum s_i = {shape.sQ}, expected {shape.expected_sQ}")
    return ShapeDecomposition(shape, dual, f2_prime, shape.sprime, shape.p, shape.e, table=B)


class TieRule(str, enum.Enum):
    """Where ``d*`` sits in ``e = ord(d*, d_2, d_3)`` when it ties with ``d_2`` or ``d_3``.

    ``PRINTED`` uses ``p(d*)`` as defined (first tied slot).  ``TIE_AWARE``
    takes the slot that makes condition 3 weakest: the last tied slot for
    even ``t`` (non-strict bound at ``p``), the first for odd ``t``.
    """

    PRINTED = "printed"
    TIE_AWARE = "tie-aware"


def p_index(shape: AciShape, rule: TieRule = TieRule.PRINTED) -> int:
    if rule is TieRule.PRINTED or not shape.even:
        return shape.p
    return max(i for i, x in enumerate(shape.e, start=1) if x == shape.dstar)


class Status(str, enum.Enum):
    VALID = "valid"
    INVALID = "invalid"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @property
    def exit_code(self) -> int:
        return {Status.VALID: 0, Status.INVALID: 1, Status.INCONCLUSIVE: 3}[self.status]

    def to_json(self) -> dict:
        return {"verdict": self.status.value, "reason": self.reason, **self.details}


def gaeta_pairs_on_sprime(shape: AciShape) -> list[tuple[int, int, int, int]]:
    """Pairs ``(i, j, s'_i, s'_j)`` with ``j = L + 2 - i`` over ``i = 2..L``.

    ``L`` is the length of ``s'`` (``t+1`` or ``t+2``); this is the
    index range ``t+3-i`` (even) and ``t+4-i`` (odd), both directions kept.
    """
    sp = shape.sprime
    L = len(sp)
    return [(i, L + 2 - i, sp[i - 1], sp[L + 1 - i]) for i in range(2, L + 1)]


def linked_degree_sequence(shape: AciShape) -> tuple[int, ...]:
    d1 = shape.d[0]
    return tuple(x - d1 for x in shape.sprime)


def check_characterization(
    D: ShapeDecomposition, provider: MinProvider = ci_min_provider, tie_rule: TieRule = TieRule.PRINTED
) -> Verdict:
    """Evaluate the three numerical conditions of the iff characterization.

    1. the sum of the ``s_i`` matches the parity formula;
    2. ``d > s'_i + s'_j`` on the Gaeta pairs of ``s'``;
    3. ``m = min(s' - d_1)`` satisfies, for ``p = p(d*)`` and
       ``e = ord(d*, d_2, d_3)``: even ``t``: ``m_p <= d*`` and ``m_i < e_i``;
       odd ``t``: ``m_p < d*`` and ``m_i <= e_i`` (``i != p``).

    Returns ``INCONCLUSIVE`` when the provider cannot answer ``min``.
    ``tie_rule`` only matters when ``d*`` equals ``d_2`` or ``d_3``.
    """
    shape = D.shape
    p = p_index(shape, tie_rule)
    details: dict = {"t": shape.t, "sprime": list(D.sprime), "p": p, "e": list(D.e)}
    if not shape.sum_identity_holds:
        return Verdict(Status.INVALID, "sum-identity", {**details, "sum_s": shape.sQ, "expected": shape.expected_sQ})
    bad = [(i, j, a, b) for i, j, a, b in gaeta_pairs_on_sprime(shape) if not shape.dtotal > a + b]
    if bad:
        i, j, a, b = bad[0]
        return Verdict(Status.INVALID, "gaeta-on-sprime", {**details, "index": i, "pair": [a, b], "d": shape.dtotal})
    delta_g = linked_degree_sequence(shape)
    details["delta_G"] = list(delta_g)
    try:
        validate_degree_sequence(delta_g)
    except AciError as exc:
        return Verdict(Status.INVALID, "linked-sequence", {**details, "error": str(exc)})
    try:
        answer = min_ci(delta_g, provider)
    except AciError as exc:
        # a provider that fails to answer leaves the question open
        return Verdict(Status.INCONCLUSIVE, "min-unknown", {**details, "error": str(exc)})
    if answer is None:
        return Verdict(Status.INCONCLUSIVE, "min-unknown", details)
    m = answer.triple
    details.update(m=list(m), min_source=answer.source)
    ok, failed = _min_condition(m, D.e, p, shape.dstar, shape.even)
    if not ok:
        return Verdict(Status.INVALID, "min-condition", {**details, "failed_index": failed})
    return Verdict(Status.VALID, "", details)


def _min_condition(m, e, p, dstar, even) -> tuple[bool, Optional[int]]:
    for i in (1, 2, 3):
        mi, ei = m[i - 1], e[i - 1]
        if i == p:
            ok = mi <= dstar if even else mi < dstar
        else:
            ok = mi < ei if even else mi <= ei
        if not ok:
            return False, i
    return True, None


def check_table(B: BettiTable, provider: MinProvider = ci_min_provider, tie_rule: TieRule = TieRule.PRINTED) -> Verdict:
    """Decide whether ``B`` is the Betti table of a codim-3 ACI.

    Tables that fail the alternating-sum invariants or cannot be decomposed
    are ``INVALID`` with the failing check named in ``reason``.
    """
    if B.codim != 3:
        return Verdict(Status.INVALID, "codim", {"codim": B.codim})
    if B.rank_alternating_sum() != 0:
        return Verdict(Status.INVALID, "rank-alternating-sum", {"value": B.rank_alternating_sum()})
    if B.shift_alternating_sum() != 0:
        return Verdict(Status.INVALID, "sum-identity", {"shift_alternating_sum": B.shift_alternating_sum()})
    try:
        D = decompose(B)
    except AciError as exc:
        return Verdict(Status.INVALID, f"decompose:{type(exc).__name__}", {"error": str(exc)})
    return check_characterization(D, provider, tie_rule)


class LinkedDegrees(NamedTuple):
    delta_G: DegreeSequence
    theta_G: int
    ci_type: tuple[int, int, int]


def linked_gorenstein_degrees(D: ShapeDecomposition) -> LinkedDegrees:
    """Degrees of the Gorenstein ideal linked to ``D`` in a CI of type ``(d*, d_2, d_3)``.

    ``delta_G = s' - d_1`` and ``theta_G = d* + d_2 + d_3 - d_1``.
    """
    shape = D.shape
    d1, d2, d3 = shape.d
    theta_g = shape.dstar + d2 + d3 - d1
    delta = tuple(x - d1 for x in D.sprime)
    try:
        g = validate_degree_sequence(delta)
    except AciError as exc:
        raise LinkedSequenceInvalid(f"s' - d_1 = {delta}: {exc}") from None
    if g.theta != theta_g:
        raise LinkedSequenceInvalid(f"theta of {delta} is {g.theta}, expected {theta_g}")
    return LinkedDegrees(g.delta, theta_g, ord_((shape.dstar, d2, d3)))

