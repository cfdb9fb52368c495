"""Shift-level algebra of graded free modules and their resolutions.

A graded free module ``R(-a_1) + ... + R(-a_r)`` is stored as the sorted
multiset of its twists.  A Betti table of an artinian cyclic module ``R/I``
in ``c`` variables is the list ``[F_1, ..., F_c]``; ``F_0 = R`` is implicit.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import AciError, CannotCancel, NegativeValue, NotSubmodule


@dataclass(frozen=True, order=True)
class FreeModuleShifts:
    """Multiset of twists ``a`` of a free module ``(+) R(-a)``, kept sorted."""

    shifts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "shifts", tuple(sorted(int(a) for a in self.shifts)))

    @classmethod
    def of(cls, *shifts: int) -> FreeModuleShifts:
        return cls(shifts)

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> FreeModuleShifts:
        return cls(a for a, k in counts.items() for _ in range(k))

    @property
    def rank(self) -> int:
        return len(self.shifts)

    @property
    def total(self) -> int:
        """Sum of the shifts (the ``s_(i)`` sums)."""
        return sum(self.shifts)

    def counts(self) -> Counter:
        return Counter(self.shifts)

    def __iter__(self):
        return iter(self.shifts)

    def __len__(self) -> int:
        return len(self.shifts)

    def __contains__(self, a: object) -> bool:
        return a in self.shifts

    def twist(self, k: int) -> FreeModuleShifts:
        """``F(-k)``: add ``k`` to every shift (``k`` may be negative)."""
        return FreeModuleShifts(a + k for a in self.shifts)

    def is_submultiset_of(self, other: FreeModuleShifts) -> bool:
        have = other.counts()
        return all(have[a] >= k for a, k in self.counts().items())

    def __str__(self) -> str:
        if not self.shifts:
            return "0"
        parts = []
        for a, k in sorted(self.counts().items()):
            parts.append(f"R(-{a})" if k == 1 else f"R(-{a})^{k}")
        return " + ".join(parts)


def dual_twist(F: FreeModuleShifts, d: int) -> FreeModuleShifts:
    """``F^v(-d)``: the multiset ``{d - a : a in F}``."""
    return FreeModuleShifts(d - a for a in F.shifts)


def direct_sum(F: FreeModuleShifts, G: FreeModuleShifts) -> FreeModuleShifts:
    return FreeModuleShifts(F.shifts + G.shifts)


def subtract(F: FreeModuleShifts, G: FreeModuleShifts) -> FreeModuleShifts:
    """Remove one copy of each shift of ``G`` from ``F``.

    Raises :class:`NotSubmodule` naming the first shift of ``G`` whose
    multiplicity exceeds the one in ``F``.
    """
    have = F.counts()
    for a, k in sorted(G.counts().items()):
        if have[a] < k:
            raise NotSubmodule(f"shift {a} occurs {k} times in G but {have[a]} times in F")
        have[a] -= k
    return FreeModuleShifts.from_counts(have)


class Minimality(str, enum.Enum):
    MINIMAL = "minimal"
    NON_MINIMAL = "non-minimal"
    # greedy formal cancellation, not a proof of minimality
    FORMAL = "formally-minimalized"


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti table ``[F_1, ..., F_c]`` of ``R/I`` over ``c`` variables.

    ``status`` does not take part in equality: two tables are equal when
    their shift multisets agree.  Consumers that require a minimal
    resolution check ``is_minimal`` explicitly.
    """

    codim: int
    modules: tuple[FreeModuleShifts, ...]
    status: Minimality = field(default=Minimality.MINIMAL, compare=False)

    def __post_init__(self) -> None:
        mods = tuple(m if isinstance(m, FreeModuleShifts) else FreeModuleShifts(m) for m in self.modules)
        object.__setattr__(self, "modules", mods)
        object.__setattr__(self, "status", Minimality(self.status))
        if self.codim < 1:
            raise AciError(f"codim must be positive, got {self.codim}")
        if len(mods) != self.codim:
            raise AciError(f"expected {self.codim} modules, got {len(mods)}")

    @classmethod
    def from_lists(cls, *modules: Iterable[int], status: Minimality = Minimality.MINIMAL) -> BettiTable:
        return cls(len(modules), tuple(FreeModuleShifts(m) for m in modules), status)

    def F(self, i: int) -> FreeModuleShifts:
        """The ``i``-th module, 1-based as in ``F_1, ..., F_c``."""
        if not 1 <= i <= self.codim:
            raise IndexError(f"homological index {i} outside 1..{self.codim}")
        return self.modules[i - 1]

    @property
    def is_minimal(self) -> bool:
        return self.status is Minimality.MINIMAL

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(m.rank for m in self.modules)

    def rank_alternating_sum(self) -> int:
        return 1 + sum((-1) ** i * m.rank for i, m in enumerate(self.modules, start=1))

    def shift_alternating_sum(self) -> int:
        return sum((-1) ** i * m.total for i, m in enumerate(self.modules, start=1))

    def with_status(self, status: Minimality) -> BettiTable:
        return BettiTable(self.codim, self.modules, status)

    def same_shifts(self, other: BettiTable) -> bool:
        return self.codim == other.codim and self.modules == other.modules

    def to_json(self) -> dict:
        out: dict = {"codim": self.codim, "F": [list(m.shifts) for m in self.modules]}
        if not self.is_minimal:
            out["minimal"] = False
            out["status"] = self.status.value
        return out

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        if "F" not in data:
            raise AciError("Betti table JSON needs an 'F' list")
        mods = data["F"]
        codim = int(data.get("codim", len(mods)))
        status = Minimality(data.get("status", Minimality.MINIMAL if data.get("minimal", True) else Minimality.NON_MINIMAL))
        return cls(codim, tuple(FreeModuleShifts(m) for m in mods), status)

    def __str__(self) -> str:
        parts = [str(m) for m in reversed(self.modules)]
        return "0 -> " + " -> ".join(parts) + " -> R"


def koszul_table(degrees: Sequence[int]) -> BettiTable:
    """Betti table of a complete intersection with generator degrees ``degrees``."""
    from itertools import combinations

    c = len(degrees)
    mods = [FreeModuleShifts(sum(S) for S in combinations(degrees, i)) for i in range(1, c + 1)]
    return BettiTable(c, tuple(mods))


def _binom_or_zero(n: int, k: int) -> int:
    return comb(n, k) if n >= k >= 0 else 0


def hilbert_function(B: BettiTable, j: int) -> int:
    """Hilbert function of ``R/I`` in degree ``j``, read off its Betti table.

    Uses the alternating binomial sum over the shifts with ``c = B.codim``
    ambient variables.  A negative value means ``B`` cannot be the
    resolution of a cyclic module.
    """
    if j < 0:
        return 0
    c = B.codim
    value = _binom_or_zero(j + c - 1, c - 1)
    for i, mod in enumerate(B.modules, start=1):
        sign = -1 if i % 2 else 1
        for a in mod.shifts:
            value += sign * _binom_or_zero(j - a + c - 1, c - 1)
    if value < 0:
        raise NegativeValue(f"Hilbert function is {value} in degree {j}")
    return value


def hilbert_function_values(B: BettiTable, upto: int | None = None) -> list[int]:
    """``[HF(B, 0), ..., HF(B, upto)]``; default ``upto`` is the extinction bound."""
    if upto is None:
        upto = extinction_degree(B)
    return [hilbert_function(B, j) for j in range(upto + 1)]


def extinction_degree(B: BettiTable) -> int:
    """Degree past which the Hilbert function of an artinian ``R/I`` vanishes.

    For an artinian algebra the socle degree is ``max(F_c) - c``.
    """
    last = B.modules[-1]
    if not last.shifts:
        return max((a for m in B.modules for a in m.shifts), default=0)
    return max(last.shifts) - B.codim


def cancel(B: BettiTable, i: int, a: int, count: int = 1) -> BettiTable:
    """Formally cancel ``count`` copies of ``R(-a)`` between ``F_i`` and ``F_{i+1}``.

    This is a move on shifts only.  Whether the corresponding map really
    has a unit entry is the caller's burden.
    """
    if count < 1:
        raise CannotCancel(f"count must be positive, got {count}")
    if not 1 <= i < B.codim:
        raise CannotCancel(f"index {i} must satisfy 1 <= i < {B.codim}")
    piece = FreeModuleShifts([a] * count)
    mods = list(B.modules)
    for k in (i - 1, i):
        if not piece.is_submultiset_of(mods[k]):
            raise CannotCancel(f"F_{k + 1} has fewer than {count} copies of R(-{a})")
        mods[k] = subtract(mods[k], piece)
    return BettiTable(B.codim, tuple(mods), B.status)


def minimalize(B: BettiTable) -> BettiTable:
    """Greedily cancel every shift shared by consecutive modules.

    The result is labelled ``formally-minimalized``: shift coincidences do
    not imply unit entries in the differential.
    """
    out = B
    for i in range(1, B.codim):
        common = out.F(i).counts() & out.F(i + 1).counts()
        for a, k in sorted(common.items()):
            out = cancel(out, i, a, k)
    changed = not out.same_shifts(B)
    if changed or not B.is_minimal:
        return out.with_status(Minimality.FORMAL)
    return out
