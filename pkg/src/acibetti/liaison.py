"""Shift-level liaison: mapping cones, the socle-degree case, and ACI -> Gorenstein links.

Notation: ``Z`` is a Gorenstein (often complete intersection) ideal with
last shift ``theta_Z = e + c``; ``Q = Z + (f)`` with ``deg f = d*``; and
``G = Z : Q`` is Gorenstein with last shift ``theta_G = theta_Z - d*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .aci3 import ShapeDecomposition, linked_gorenstein_degrees
from .betti_core import (
    BettiTable,
    FreeModuleShifts,
    Minimality,
    cancel,
    direct_sum,
    dual_twist,
    hilbert_function,
    subtract,
)
from .errors import (
    AciError,
    CodimMismatch,
    DualNotEmbedded,
    GeneratorDegreeTooHigh,
    NotGorensteinTail,
    NotSubmodule,
    ThetaMismatch,
)
from .gorenstein3 import gorenstein_betti_table, validate_degree_sequence


@dataclass(frozen=True)
class LinkContext:
    theta_Z: int
    dstar: int
    c: int

    def __post_init__(self) -> None:
        if not 1 <= self.dstar <= self.e:
            raise AciError(f"need 1 <= d* <= e, got d*={self.dstar}, e={self.e}")

    @property
    def e(self) -> int:
        return self.theta_Z - self.c

    @property
    def theta_G(self) -> int:
        return self.theta_Z - self.dstar

    @property
    def dtotal(self) -> int:
        return 2 * self.theta_Z - self.theta_G


def _gorenstein_tail(B: BettiTable, name: str) -> int:
    last = B.modules[-1]
    if last.rank != 1:
        raise NotGorensteinTail(f"{name} ends in {last}, not a single R(-theta)")
    return last.shifts[0]


def mapping_cone_resolution(G: BettiTable, K: BettiTable, ctx: LinkContext) -> BettiTable:
    """Resolution (possibly non-minimal) of ``R/Q`` from those of ``R/G`` and ``R/Z``.

    ``F_1 = {d*} + K_1``, ``F_i = G_{i-1}(-d*) + K_i`` for ``2 <= i <= c-1``,
    ``F_c = G_{c-1}(-d*)``.  The output is tagged non-minimal.
    """
    if G.codim != K.codim or G.codim != ctx.c:
        raise CodimMismatch(f"codims G={G.codim}, K={K.codim}, context={ctx.c}")
    c = ctx.c
    theta_z = _gorenstein_tail(K, "K")
    if theta_z != ctx.theta_Z:
        raise ThetaMismatch(f"K ends in R(-{theta_z}), context says theta_Z={ctx.theta_Z}")
    theta_g = _gorenstein_tail(G, "G")
    if theta_g != ctx.theta_G:
        raise ThetaMismatch(f"G ends in R(-{theta_g}), expected theta_Z - d* = {ctx.theta_G}")
    mods = [direct_sum(FreeModuleShifts.of(ctx.dstar), K.F(1))]
    for i in range(2, c):
        mods.append(direct_sum(G.F(i - 1).twist(ctx.dstar), K.F(i)))
    mods.append(G.F(c - 1).twist(ctx.dstar))
    return BettiTable(c, tuple(mods), Minimality.NON_MINIMAL)


def liaison_hf_defect(Q: BettiTable, Z: BettiTable, G: BettiTable, theta_Z: int, j: int, shift: int) -> int:
    """``HF(Q, j) - HF(Z, j) + HF(G, theta_Z - shift - j)``; zero when the identity holds.

    With ``shift = c`` this is the Hilbert function of the exact sequence
    ``0 -> Ext^c(R/G, R)(-theta_Z) -> R/Z -> R/Q -> 0``: the canonical
    module of ``R/G`` in degree ``k`` has dimension ``HF(G, theta_Z - c - k)``
    after the twist.
    """
    return hilbert_function(Q, j) - hilbert_function(Z, j) + hilbert_function(G, theta_Z - shift - j)


def socle_degree_resolution(K: BettiTable, c: int, e: int) -> BettiTable:
    """Minimal resolution of ``R/(Z + (f))`` with ``deg f = e`` the socle degree of ``R/Z``.

    Here ``Z : Q`` is the maximal ideal, so the linked Koszul complex
    contributes ``C(c, i-1)`` copies of ``R(-(e+i-1))`` in ``F_i``.
    Requires every generator of ``Z`` to have degree below ``e``.
    """
    if K.codim != c:
        raise CodimMismatch(f"K has codim {K.codim}, expected {c}")
    theta = _gorenstein_tail(K, "K")
    if theta != e + c:
        raise ThetaMismatch(f"K ends in R(-{theta}) but e + c = {e + c}")
    high = [a for a in K.F(1).shifts if a >= e]
    if high:
        raise GeneratorDegreeTooHigh(f"generator degree {high[0]} >= e={e}; minimality not guaranteed")
    mods = [direct_sum(K.F(1), FreeModuleShifts.of(e))]
    for i in range(2, c):
        mods.append(direct_sum(K.F(i), FreeModuleShifts([e + i - 1] * comb(c, i - 1))))
    mods.append(FreeModuleShifts([e + c - 1] * comb(c, c - 1)))
    return BettiTable(c, tuple(mods))


def verify_fc_duality(B: BettiTable, d: Optional[int] = None) -> tuple[FreeModuleShifts, FreeModuleShifts]:
    """Split ``F_2 = F_c^v(-d) (+) F_2'``; ``d`` defaults to the sum of generator degrees."""
    if B.codim < 3:
        raise CodimMismatch(f"codim {B.codim} < 3")
    if d is None:
        d = B.F(1).total
    dual = dual_twist(B.F(B.codim), d)
    try:
        rest = subtract(B.F(2), dual)
    except NotSubmodule as exc:
        raise DualNotEmbedded(f"F_c^v(-{d}) = {list(dual.shifts)} not inside F_2 = {list(B.F(2).shifts)}: {exc}") from None
    return dual, rest


@dataclass(frozen=True)
class LinkResult:
    table: BettiTable
    delta_G: tuple[int, ...]
    theta_G: int
    ci_type: tuple[int, int, int]
    pre_cancellation: BettiTable
    same_betti_witness: Optional[BettiTable] = None
    analogous_case: bool = False
    forced_cancellation: bool = False

    def to_json(self) -> dict:
        return {
            "table": self.table.to_json(),
            "delta_G": list(self.delta_G),
            "theta_G": self.theta_G,
            "ci_type": list(self.ci_type),
            "pre_cancellation": self.pre_cancellation.to_json(),
            "same_betti_witness": None if self.same_betti_witness is None else self.same_betti_witness.to_json(),
            "analogous_case": self.analogous_case,
            "forced_cancellation": self.forced_cancellation,
        }


def linked_pre_table(D: ShapeDecomposition) -> BettiTable:
    """Mapping-cone resolution of ``Z : Q`` for ``Z`` a CI of type ``(d*, d_2, d_3)``.

    ``G_1 = F_3^v(-theta_Z) + {d*, d_2, d_3}``, ``G_2 = F_3(d_1) + F_2'^v(-theta_Z)``,
    ``G_3 = {theta_Z - d_1}``.
    """
    shape = D.shape
    d1, d2, d3 = shape.d
    theta_z = shape.dstar + d2 + d3
    F3 = FreeModuleShifts(shape.dtotal - si for si in shape.s)
    G1 = direct_sum(dual_twist(F3, theta_z), FreeModuleShifts.of(shape.dstar, d2, d3))
    G2 = direct_sum(F3.twist(-d1), dual_twist(D.f2_prime, theta_z))
    G3 = FreeModuleShifts.of(theta_z - d1)
    return BettiTable(3, (G1, G2, G3), Minimality.NON_MINIMAL)


def link_aci_to_gorenstein(D: ShapeDecomposition) -> LinkResult:
    """Betti table of the Gorenstein ideal linked to the ACI ``D``.

    Even ``t``, ``d* != d_1``: the summands ``R(-d_2)`` and ``R(-d_3)`` cancel.
    Even ``t``, ``d* = d_1``: the table is returned uncancelled together
    with ``same_betti_witness``, the ``t+1``-generator table realized by
    some other ideal with the same Betti numbers.  If the uncancelled
    generator degrees fail Gaeta the witness is returned instead and
    ``forced_cancellation`` is set.
    Odd ``t``: handled by the analogous construction, where ``R(-d*)``
    cancels; flagged ``analogous_case``.
    """
    shape = D.shape
    d1, d2, d3 = shape.d
    linked = linked_gorenstein_degrees(D)
    pre = linked_pre_table(D)
    witness = None
    forced = False
    if shape.even:
        if shape.dstar != d1:
            table = cancel(cancel(pre, 1, d2), 1, d3)
        else:
            witness = gorenstein_betti_table(validate_degree_sequence(linked.delta_G.degrees))
            try:
                validate_degree_sequence(pre.F(1).shifts)
                table = pre
            except AciError:
                # the uncancelled degrees break Gaeta, so no minimal resolution has them
                table, forced = witness, True
    else:
        table = cancel(pre, 1, shape.dstar)
    table = table.with_status(Minimality.MINIMAL)
    g = validate_degree_sequence(table.F(1).shifts)
    if g.theta != linked.theta_G or gorenstein_betti_table(g) != table:
        raise AciError(f"linked table {table.to_json()} is not a self-dual Gorenstein table")
    return LinkResult(
        table=table,
        delta_G=linked.delta_G.degrees,
        theta_G=linked.theta_G,
        ci_type=linked.ci_type,
        pre_cancellation=pre,
        same_betti_witness=witness,
        analogous_case=not shape.even,
        forced_cancellation=forced,
    )
