from hypothesis import assume, given
from hypothesis import strategies as st

from acibetti.aci3 import AciShape, decompose
from acibetti.betti_core import (
    BettiTable,
    FreeModuleShifts,
    cancel,
    direct_sum,
    dual_twist,
    hilbert_function_values,
    koszul_table,
    subtract,
)
from acibetti.errors import AciError
from acibetti.gorenstein3 import gorenstein_betti_table, validate_degree_sequence
from acibetti.monomial3 import MonomialIdeal3, minimal_resolution_oracle, resolution_mont2, resolution_mont3

from .oracles import gaeta_direct, staircase_hf

shifts = st.lists(st.integers(-5, 30), max_size=12).map(FreeModuleShifts)
odd_sequences = st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(1, 12), min_size=2 * n + 1, max_size=2 * n + 1))


@given(shifts, st.integers(-10, 60))
def test_dual_twist_is_an_involution(F, d):
    assert dual_twist(dual_twist(F, d), d) == F
    assert dual_twist(F, d).rank == F.rank


@given(shifts, shifts)
def test_sum_then_subtract(F, G):
    assert subtract(direct_sum(F, G), G) == F
    assert direct_sum(F, G).total == F.total + G.total


@given(st.lists(st.integers(1, 6), min_size=3, max_size=3), st.integers(1, 2), st.integers(1, 12))
def test_cancel_keeps_invariants(degs, i, a):
    B = koszul_table(degs)
    mods = list(B.modules)
    mods[i - 1] = direct_sum(mods[i - 1], FreeModuleShifts.of(a))
    mods[i] = direct_sum(mods[i], FreeModuleShifts.of(a))
    padded = BettiTable(3, tuple(mods))
    assert padded.shift_alternating_sum() == 0
    assert hilbert_function_values(padded, 20) == hilbert_function_values(B, 20)
    assert cancel(padded, i, a) == B


@given(odd_sequences)
def test_validation_agrees_with_literal_conditions(seq):
    seq = sorted(seq)
    theta, ok = gaeta_direct(tuple(seq))
    try:
        g = validate_degree_sequence(seq)
    except AciError:
        assert not ok
        return
    assert ok and g.theta == theta
    B = gorenstein_betti_table(g)
    assert B.F(2) == dual_twist(B.F(1), theta)
    assert B.rank_alternating_sum() == 0 and B.shift_alternating_sum() == 0


@given(
    st.lists(st.integers(1, 8), min_size=3, max_size=3),
    st.integers(1, 8),
    st.lists(st.integers(1, 30), min_size=2, max_size=6),
)
def test_shape_table_round_trip(d, dstar, s):
    try:
        shape = AciShape(tuple(d), dstar, tuple(s))
    except AciError:
        return
    assume(shape.sum_identity_holds)
    D = decompose(shape.betti_table())
    assert D.shape == shape


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5))
def test_oracle_hilbert_function_matches_counting(extra):
    gens = [(4, 0, 0), (0, 4, 0), (0, 0, 4), *[e for e in extra if sum(e) > 0]]
    J = MonomialIdeal3.from_generators(gens)
    assume(len(J.gens) <= 8)
    B = minimal_resolution_oracle(J)
    assert hilbert_function_values(B, 14) == [staircase_hf(J.gens, j) for j in range(15)]


@given(st.integers(2, 7), st.integers(2, 7), st.integers(1, 7), st.data())
def test_mont2_shapes(a1, a2, a3, data):
    b1 = data.draw(st.integers(1, a1 - 1))
    b2 = data.draw(st.integers(1, a2 - 1))
    D = decompose(resolution_mont2(a1, a2, a3, b1, b2))
    assert D.shape.t == 2 and D.shape.dstar == a3 and D.shape.sum_identity_holds


@given(st.integers(2, 7), st.integers(2, 7), st.integers(2, 7), st.data())
def test_mont3_shapes(a1, a2, a3, data):
    b = [data.draw(st.integers(1, a - 1)) for a in (a1, a2, a3)]
    D = decompose(resolution_mont3(a1, a2, a3, *b))
    assert D.shape.t == 3 and D.shape.dstar == sum(b) and D.shape.sum_identity_holds


@given(st.lists(shifts.filter(lambda F: F.rank > 0), min_size=3, max_size=3))
def test_json_round_trip(mods):
    B = BettiTable(3, tuple(mods))
    assert BettiTable.from_json(B.to_json()) == B
