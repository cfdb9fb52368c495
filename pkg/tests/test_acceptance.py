"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line."""

import json
from itertools import combinations_with_replacement

import pytest

from acibetti.aci3 import Status, check_table, decompose, extract_dstar
from acibetti.betti_core import BettiTable, dual_twist, koszul_table
from acibetti.cli import main
from acibetti.errors import AciError, NotRealizable
from acibetti.gorenstein3 import gorenstein_betti_table, null_provider, validate_degree_sequence
from acibetti.liaison import link_aci_to_gorenstein
from acibetti.monomial3 import (
    minimal_resolution_oracle,
    mont2_ideal,
    mont2_parameters,
    mont3_ideal,
    mont3_parameters,
    realize_t2,
    realize_t3,
    resolution_mont2,
    resolution_mont3,
)
from acibetti.oracle_lab import (
    GradedIdealFp,
    OracleMinProvider,
    colon_ideal,
    minimal_resolution_fp,
    pfaffian_gorenstein_sample,
    random_ci_inside,
)

from .conftest import ACCEPTANCE_LINES, TABLE_A, TABLE_B, TABLE_C

T = BettiTable.from_lists


def record(n, ok, what):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {what}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def cli_json(capsys, tmp_path, cmd, table):
    path = tmp_path / "table.json"
    path.write_text(json.dumps(table))
    code = main([cmd, str(path)])
    return code, json.loads(capsys.readouterr().out)


def test_criterion_1_golden_a(capsys, tmp_path):
    code, data = cli_json(capsys, tmp_path, "analyze-betti", TABLE_A)
    got = (data["dstar"], data["d"], data["s"], data["t"], data["u"], data["dtotal"])
    want = (14, [8, 9, 10], [19] * 4 + [20] * 4 + [21] * 3, 11, 54, 41)
    record(1, code == 0 and got == want, f"analyze-betti on golden A gives d*, d, s, t, u, d = {got}")


def test_criterion_2_golden_b(capsys, tmp_path, table_b):
    code, data = cli_json(capsys, tmp_path, "analyze-betti", TABLE_B)
    ok = code == 0 and data["dstar"] == 4
    code, link = cli_json(capsys, tmp_path, "link", TABLE_B)
    ok &= code == 0 and link["table"]["F"] == [[3, 4, 6, 6, 7], [6, 7, 7, 9, 10], [13]]
    ok &= not link["forced_cancellation"]
    ok &= link["same_betti_witness"]["F"] == [[3, 4, 6], [7, 9, 10], [13]]
    J = realize_t2(decompose(table_b).shape)
    ok &= minimal_resolution_oracle(J) == table_b and minimal_resolution_oracle(J).to_json() == TABLE_B
    record(2, ok, f"golden B: d*=4, uncancelled link {link['table']['F']} with witness, realized by {J}")


def test_criterion_3_golden_c(capsys, tmp_path, table_c):
    code, data = cli_json(capsys, tmp_path, "analyze-betti", TABLE_C)
    ok = code == 0 and data["dstar"] == 5 and data["s"] == [4, 6, 6]
    code, rt = cli_json(capsys, tmp_path, "roundtrip", TABLE_C)
    ok &= code == 1 and rt["error"] == "NotRealizable" and rt["message"] == "s1=4 <= d*=5"
    with pytest.raises(NotRealizable):
        realize_t3(decompose(table_c).shape)
    record(3, ok, f"golden C: d*=5, s=(4,6,6); roundtrip reports {rt['error']}({rt['message']})")


def test_criterion_4_closed_form_vs_oracle():
    bad = []
    n2 = n3 = 0
    for params in mont2_parameters(5):
        n2 += 1
        B = resolution_mont2(*params)
        if B != minimal_resolution_oracle(mont2_ideal(*params)) or extract_dstar(B).dstar != params[2]:
            bad.append(("mont2", params))
    for params in mont3_parameters(4):
        n3 += 1
        B = resolution_mont3(*params)
        if B != minimal_resolution_oracle(mont3_ideal(*params)) or extract_dstar(B).dstar != sum(params[3:]):
            bad.append(("mont3", params))
    record(4, not bad and n2 == 500 and n3 == 216, f"{n2} mont2 + {n3} mont3 closed forms equal the lcm-lattice oracle, d* exact; mismatches {bad[:3]}")


def test_criterion_5_decompose_and_sum_identity():
    bad = []
    tables = [resolution_mont2(*p) for p in mont2_parameters(5)] + [resolution_mont3(*p) for p in mont3_parameters(4)]
    for B in tables:
        try:
            D = decompose(B)
        except AciError as exc:
            bad.append((B.to_json(), str(exc)))
            continue
        if not D.shape.sum_identity_holds or D.shape.t not in (2, 3):
            bad.append((B.to_json(), "sum identity"))
    record(5, not bad, f"{len(tables)} monomial ACI tables decompose and satisfy the parity sum identity; failures {bad[:2]}")


def test_criterion_6_self_duality():
    checked = 0
    bad = []
    # no valid sequence with entries <= 8 is longer than 17 (at most 2*d_1 + 1 generators)
    for L in range(3, 20, 2):
        n = (L - 1) // 2
        for seq in combinations_with_replacement(range(1, 9), L):
            if sum(seq) % n:
                continue
            try:
                g = validate_degree_sequence(seq)
            except AciError:
                continue
            checked += 1
            B = gorenstein_betti_table(g)
            if B.F(2) != dual_twist(B.F(1), g.theta) or B.rank_alternating_sum() or B.shift_alternating_sum():
                bad.append(seq)
    record(6, not bad and checked == 1289, f"{checked} valid sequences with entries <= 8: self-dual, alternating sums 0")


P = 32003


def _mono(*exps):
    return GradedIdealFp.from_monomials(exps, P)


def liaison_instances():
    """(name, Z, Q, G, c) with G = Z : Q computed by the prime-field oracle."""
    out = []
    # socle-degree links: f spans the socle of R/Z
    for a in combinations_with_replacement((2, 3, 4), 3):
        Z = _mono((a[0], 0, 0), (0, a[1], 0), (0, 0, a[2]))
        Q = _mono((a[0], 0, 0), (0, a[1], 0), (0, 0, a[2]), (a[0] - 1, a[1] - 1, a[2] - 1))
        out.append((f"socle{a}", Z, Q))
    # monomial ACIs inside monomial CIs
    for params in mont2_parameters(3):
        a1, a2, a3, b1, b2 = params
        Z = _mono((a1, 0, 0), (0, a2, 0), (0, 0, a3))
        out.append((f"mont2{params}", Z, _mono(*mont2_ideal(*params).gens)))
    for params in [(2, 2, 2, 1, 1, 1), (3, 2, 2, 1, 1, 1), (3, 3, 2, 2, 1, 1), (3, 3, 3, 1, 2, 1)]:
        Z = _mono((params[0], 0, 0), (0, params[1], 0), (0, 0, params[2]))
        out.append((f"mont3{params}", Z, _mono(*mont3_ideal(*params).gens)))
    # generic complete intersections inside a monomial ACI and a pfaffian ideal
    Q = _mono((3, 0, 0), (0, 4, 0), (0, 0, 5), (1, 2, 0))
    out.append(("generic(3,4,5) in (x3,y4,z5,xy2)", random_ci_inside(Q, (3, 4, 5), seed=1), Q))
    G0 = pfaffian_gorenstein_sample((3, 4, 6, 6, 7), seed=0)
    out.append(("generic(4,6,7) in pfaffian(3,4,6,6,7)", random_ci_inside(G0, (4, 6, 7), seed=0), G0))
    return [(name, Z, Q, colon_ideal(Z, Q)) for name, Z, Q in out]


@pytest.fixture(scope="module")
def linked_triples():
    return liaison_instances()


def _defects(Z, Q, G, shift):
    theta_z = Z.socle_degree() + 3
    bad = []
    for j in range(theta_z + 1):
        lhs = Q.hilbert(j)
        rhs = Z.hilbert(j) - G.hilbert(theta_z - shift - j)
        if lhs != rhs:
            bad.append((j, lhs - rhs))
    return bad


@pytest.mark.xfail(strict=True, reason="the identity as stated is off by the codimension; see the shifted check")
def test_criterion_7_liaison_hf_identity_literal(linked_triples):
    failures = [(name, d[:2]) for name, Z, Q, G in linked_triples if (d := _defects(Z, Q, G, 0))]
    record(
        7,
        len(linked_triples) >= 25 and not failures,
        f"literal HF(Q,j) = HF(Z,j) - HF(G, theta_Z - j) on {len(linked_triples)} linked triples; "
        f"{len(failures)} violate it, e.g. {failures[:1]}",
    )


def test_criterion_7_liaison_hf_identity_shifted(linked_triples):
    failures = [name for name, Z, Q, G in linked_triples if _defects(Z, Q, G, 3)]
    ok = len(linked_triples) >= 25 and not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion 7 (shifted by c=3): HF(Q,j) = HF(Z,j) - HF(G, theta_Z - 3 - j) on {len(linked_triples)} triples"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, failures


def test_criterion_8_oracle_consistency():
    bad = []
    for k, degs in enumerate(combinations_with_replacement(range(1, 6), 3)):
        K = koszul_table(degs)
        mono = _mono((degs[0], 0, 0), (0, degs[1], 0), (0, 0, degs[2]))
        generic = pfaffian_gorenstein_sample(degs, seed=k)
        if minimal_resolution_fp(mono) != K or minimal_resolution_fp(generic) != K:
            bad.append(degs)
    Q = _mono((3, 0, 0), (0, 4, 0), (0, 0, 5), (1, 2, 0))
    G = colon_ideal(random_ci_inside(Q, (3, 4, 5), seed=1), Q)
    colon_ok = minimal_resolution_fp(G) == gorenstein_betti_table(validate_degree_sequence((2, 2, 5)))
    target = T([2] * 5, [3] * 5, [5])
    pf_ok = all(minimal_resolution_fp(pfaffian_gorenstein_sample((2, 2, 2, 2, 2), seed=s)) == target for s in range(5))
    record(
        8,
        not bad and colon_ok and pf_ok,
        f"35 monomial and 35 generic CIs give Koszul tables (mismatches {bad}); colon gives delta=(2,2,5): {colon_ok}; "
        f"5 pfaffian samples give {{2^5}},{{3^5}},{{5}}: {pf_ok}",
    )


def test_criterion_9_characterization(table_a, table_b, table_c):
    verdicts = {
        "A": check_table(table_a, OracleMinProvider(max_entry=13)),
        "B": check_table(table_b),
        "C": check_table(table_c, OracleMinProvider()),
    }
    null_c = check_table(table_c, null_provider)
    mutants = {
        "broken sum": T([4, 4, 6, 7], [7, 8, 10, 10, 11], [11, 15]),
        "broken Gaeta on s'": T([4, 4, 6, 7], [4, 8, 10, 11, 13], [8, 17]),
        "broken F2'": T([4, 4, 6, 7], [7, 9, 10, 10, 10], [11, 14]),
    }
    mutant_verdicts = {k: check_table(B) for k, B in mutants.items()}
    ok = all(v.status is Status.VALID for v in verdicts.values())
    ok &= null_c.status is Status.INCONCLUSIVE
    ok &= all(v.status is Status.INVALID for v in mutant_verdicts.values())
    summary = ", ".join(f"{k}={v.status.value}" for k, v in verdicts.items())
    mut = ", ".join(f"{k}: {v.status.value}({v.reason})" for k, v in mutant_verdicts.items())
    record(9, ok, f"{summary} (m_A={verdicts['A'].details.get('m')}, m_C={verdicts['C'].details.get('m')}); C under null provider: {null_c.status.value}; {mut}")


def test_golden_b_link_agrees_with_closed_form(table_b):
    assert link_aci_to_gorenstein(decompose(table_b)).table == T([3, 4, 6, 6, 7], [6, 7, 7, 9, 10], [13])
