"""Codimension-3 Gorenstein degree sequences, their Betti tables, and min(delta)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Protocol

from .betti_core import BettiTable, FreeModuleShifts, dual_twist
from .errors import AciError, GaetaViolation, NotOddLength, ThetaNotIntegral


def ord_(values: Iterable[int]) -> tuple[int, ...]:
    """Sorted ascending copy of ``values``."""
    return tuple(sorted(values))


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", ord_(int(d) for d in self.degrees))
        if len(self.degrees) < 3 or len(self.degrees) % 2 == 0:
            raise NotOddLength(f"need odd length >= 3, got {len(self.degrees)}")
        if self.degrees[0] < 1:
            raise AciError("degrees must be positive")

    @property
    def n(self) -> int:
        return (len(self.degrees) - 1) // 2

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]


@dataclass(frozen=True)
class GorensteinShape:
    delta: DegreeSequence
    theta: int


def gaeta_failures(degrees: tuple[int, ...], theta: int) -> list[int]:
    """1-based indices ``i`` in ``2..n`` with ``theta <= d_i + d_{2n+3-i}``."""
    n = (len(degrees) - 1) // 2
    return [i for i in range(2, n + 1) if not theta > degrees[i - 1] + degrees[2 * n + 3 - i - 1]]


def validate_degree_sequence(degrees: Iterable[int]) -> GorensteinShape:
    """Accept ``degrees`` as generator degrees of a codim-3 Gorenstein ideal.

    The input is sorted first.  ``theta = sum / n`` must be an integer and
    the Gaeta inequalities ``theta > d_i + d_{2n+3-i}`` (``2 <= i <= n``)
    must hold strictly.
    """
    delta = DegreeSequence(tuple(degrees))
    n = delta.n
    total = sum(delta.degrees)
    if total % n:
        raise ThetaNotIntegral(f"sum {total} is not divisible by n={n}")
    theta = total // n
    bad = gaeta_failures(delta.degrees, theta)
    if bad:
        i = bad[0]
        raise GaetaViolation(
            i,
            f"Gaeta condition fails at i={i}: theta={theta} <= "
            f"{delta[i - 1]} + {delta[2 * n + 3 - i - 1]}",
        )
    return GorensteinShape(delta, theta)


def gorenstein_betti_table(shape: GorensteinShape) -> BettiTable:
    """Self-dual resolution ``R(-theta) -> (+) R(-(theta - d_i)) -> (+) R(-d_i)``."""
    F1 = FreeModuleShifts(shape.delta.degrees)
    return BettiTable(3, (F1, dual_twist(F1, shape.theta), FreeModuleShifts.of(shape.theta)))


@dataclass(frozen=True)
class MinAnswer:
    """A provider's answer for ``min(delta)``; ``source`` says how it was obtained."""

    triple: tuple[int, int, int]
    source: str = "closed-form"


class MinProvider(Protocol):
    """Answers ``min(delta)`` or ``None`` when it does not know."""

    def __call__(self, delta: DegreeSequence) -> Optional[MinAnswer]: ...


def ci_min_provider(delta: DegreeSequence) -> Optional[MinAnswer]:
    """Closed-form provider: only the complete intersection case ``n = 1``."""
    if delta.n == 1:
        return MinAnswer(tuple(delta.degrees))
    return None


def null_provider(delta: DegreeSequence) -> Optional[MinAnswer]:
    return None


def min_ci(delta: DegreeSequence | Iterable[int], provider: MinProvider = ci_min_provider) -> Optional[MinAnswer]:
    """``min(delta)`` from ``provider``; ``None`` means unknown.

    ``delta`` is validated first.  No closed formula beyond the complete
    intersection case is attempted here.
    """
    shape = validate_degree_sequence(delta.degrees if isinstance(delta, DegreeSequence) else delta)
    answer = provider(shape.delta)
    if answer is None:
        return None
    triple = ord_(answer.triple)
    if len(triple) != 3:
        raise AciError(f"provider returned {answer.triple}, not a triple")
    if triple[0] < shape.delta[0]:
        raise AciError(f"provider answer {triple} lies below the initial degree {shape.delta[0]}")
    return MinAnswer(triple, answer.source)
