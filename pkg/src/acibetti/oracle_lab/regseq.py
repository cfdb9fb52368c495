"""Regular-sequence membership tests and a search-based provider for min(delta).

Three forms ``g_1, g_2, g_3`` of degrees ``a_1, a_2, a_3`` in ``k[x, y, z]``
form a regular sequence iff ``(g)`` is primary to the maximal ideal, and
then ``R/(g)`` vanishes from degree ``a_1 + a_2 + a_3 - 2`` on.  Conversely
if ``(g)`` contains all forms of that degree it is m-primary.  So one rank
computation in degree ``a_1 + a_2 + a_3 - 2`` decides the question for a
given triple, which is equivalent to matching the complete intersection
Hilbert function through that degree.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Optional

import numpy as np

from ..errors import AciError, BoundTooSmall, DegreeBelowIdeal, SamplingFailed
from ..gorenstein3 import DegreeSequence, MinAnswer, ord_, validate_degree_sequence
from .linalg import DEFAULT_P, rank
from .pfaffian import pfaffian_gorenstein_sample
from .poly import GradedIdealFp, Poly, dim_R, multiples_matrix, poly_to_json, vector_to_poly

log = logging.getLogger(__name__)

REGSEQ_DEGREE_CAP = 40
DESK_MAX_ENTRY = 8


class RegSeq(str, enum.Enum):
    YES = "yes"
    PROBABLY_NO = "probably-no"


@dataclass(frozen=True)
class RegSeqAnswer:
    verdict: RegSeq
    degrees: tuple[int, int, int]
    witness: Optional[tuple[Poly, Poly, Poly]] = None
    trials: int = 0

    @property
    def yes(self) -> bool:
        return self.verdict is RegSeq.YES

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "degrees": list(self.degrees),
            "trials": self.trials,
            "witness": None if self.witness is None else [poly_to_json(g) for g in self.witness],
        }


def is_regular_sequence(forms, p: int = DEFAULT_P) -> bool:
    """Whether three homogeneous forms generate an ideal primary to ``(x, y, z)``."""
    forms = [g for g in forms if g]
    if len(forms) != 3:
        return False
    degs = [sum(next(iter(g))) for g in forms]
    top = sum(degs) - 2
    if top > REGSEQ_DEGREE_CAP:
        raise BoundTooSmall(f"test degree {top} exceeds cap {REGSEQ_DEGREE_CAP}")
    if top < 0:
        return True
    M = np.vstack([multiples_matrix(g, top, p) for g in forms])
    return rank(M, p) == dim_R(top)


def random_element(I: GradedIdealFp, degree: int, rng: np.random.Generator) -> Poly:
    R, _ = I.piece(degree)
    if len(R) == 0:
        return {}
    coeffs = rng.integers(0, I.p, size=len(R))
    return vector_to_poly((coeffs @ R) % I.p, degree)


def regular_sequence_test(I: GradedIdealFp, degrees, trials: int, seed: int) -> RegSeqAnswer:
    """Look for a regular sequence of the given degrees among random elements of ``I``.

    ``YES`` carries a witness that re-verifies deterministically;
    ``PROBABLY_NO`` only means ``trials`` random attempts failed.
    """
    degs = ord_(degrees)
    if len(degs) != 3 or degs[0] < 1:
        raise AciError(f"need three positive degrees, got {degrees}")
    if trials < 1:
        raise AciError("trials must be at least 1")
    init = I.initial_degree()
    if init < 0 or degs[0] < init:
        raise DegreeBelowIdeal(f"degree {degs[0]} is below the initial degree {init} of I")
    rng = np.random.default_rng([seed, *degs])
    for k in range(1, trials + 1):
        forms = tuple(random_element(I, a, rng) for a in degs)
        if is_regular_sequence(forms, I.p):
            return RegSeqAnswer(RegSeq.YES, degs, forms, k)  # type: ignore[arg-type]
    return RegSeqAnswer(RegSeq.PROBABLY_NO, degs, None, trials)


def verify_witness(I: GradedIdealFp, answer: RegSeqAnswer) -> bool:
    """Re-check a ``YES`` answer: forms lie in ``I``, have the stated degrees, and are regular."""
    if not answer.yes or answer.witness is None:
        return False
    for g, a in zip(answer.witness, answer.degrees):
        if not g or {sum(e) for e in g} != {a} or not I.contains(g):
            return False
    return is_regular_sequence(answer.witness, I.p)


@dataclass
class SearchLog:
    tested: list = field(default_factory=list)

    def record(self, triple, sample, answer: RegSeqAnswer) -> None:
        self.tested.append((triple, sample, answer.verdict.value))


def candidate_triples(shape_delta: DegreeSequence, theta: int):
    """Triples ``d_1 <= a_1 <= a_2 <= a_3 <= theta`` by increasing sum.

    A complete intersection strictly inside a Gorenstein ideal has larger
    socle degree, so for ``n > 1`` only sums above ``theta`` can occur.
    """
    lo = shape_delta[0]
    floor = theta if shape_delta.n == 1 else theta + 1
    triples = [t for t in combinations_with_replacement(range(lo, theta + 1), 3) if sum(t) >= floor]
    return sorted(triples, key=lambda t: (sum(t), t))


def _enough_room(I: GradedIdealFp, triple) -> bool:
    # k equal degrees need k independent forms of that degree
    for a in set(triple):
        if I.dim(a) < triple.count(a):
            return False
    return True


def probabilistic_min_provider(
    delta,
    samples: int = 3,
    trials: int = 4,
    seed: int = 0,
    p: int = DEFAULT_P,
    max_entry: int = DESK_MAX_ENTRY,
    search_log: Optional[SearchLog] = None,
) -> Optional[MinAnswer]:
    """Smallest triple of regular-sequence degrees found in random pfaffian ideals.

    Triples are scanned by increasing sum; the first sum level with a
    ``YES`` gives the answer.  Since ``min(delta)`` is the unique minimal
    element, a second ``YES`` triple on that level is a contradiction and
    the answer is ``None``.
    """
    shape = validate_degree_sequence(delta.degrees if isinstance(delta, DegreeSequence) else delta)
    if max(shape.delta.degrees) > max_entry:
        raise AciError(f"entries of {shape.delta.degrees} exceed the desk-scale bound {max_entry}")
    ideals = [pfaffian_gorenstein_sample(shape.delta, seed=seed * 1000 + k, p=p) for k in range(samples)]
    level = None
    found: list[tuple[int, int, int]] = []
    for triple in candidate_triples(shape.delta, shape.theta):
        if level is not None and sum(triple) > level:
            break
        for k, I in enumerate(ideals):
            if not _enough_room(I, triple):
                continue
            answer = regular_sequence_test(I, triple, trials, seed=seed * 1000 + k)
            if search_log is not None:
                search_log.record(triple, k, answer)
            if answer.yes:
                found.append(triple)
                level = sum(triple)
                break
    if not found:
        return None
    if len(found) > 1:
        log.warning("several minimal regular-sequence degrees %s for %s", found, shape.delta.degrees)
        return None
    return MinAnswer(found[0], "probabilistic")


@dataclass(frozen=True)
class OracleMinProvider:
    """``MinProvider`` backed by :func:`probabilistic_min_provider`."""

    samples: int = 3
    trials: int = 4
    seed: int = 0
    p: int = DEFAULT_P
    max_entry: int = DESK_MAX_ENTRY

    def __call__(self, delta: DegreeSequence) -> Optional[MinAnswer]:
        return probabilistic_min_provider(delta, self.samples, self.trials, self.seed, self.p, self.max_entry)


def random_ci_inside(I: GradedIdealFp, degrees, seed: int, trials: int = 20) -> GradedIdealFp:
    """A complete intersection of the given degrees inside ``I``, from random elements."""
    answer = regular_sequence_test(I, degrees, trials, seed)
    if not answer.yes:
        raise SamplingFailed(f"no regular sequence of degrees {answer.degrees} found in {trials} trials")
    return GradedIdealFp(answer.witness, I.p)
