import csv
import io
import json
import shutil
import subprocess

import pytest

from acibetti.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main
from acibetti.oracle_lab import pfaffian_gorenstein_sample

from .conftest import TABLE_A, TABLE_B, TABLE_C


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_gorenstein_degrees(capsys):
    code, out, _ = run(capsys, "check-gorenstein-degrees", "3,4,6,6,7")
    assert code == EXIT_OK and json.loads(out)["theta"] == 13
    code, out, _ = run(capsys, "check-gorenstein-degrees", "2,2,2,2,3")
    assert code == EXIT_FAIL and json.loads(out)["error"] == "ThetaNotIntegral"
    code, _, _ = run(capsys, "check-gorenstein-degrees", "2,x")
    assert code == EXIT_USAGE


def test_analyze_golden_a(capsys, files):
    code, out, _ = run(capsys, "analyze-betti", files("a.json", TABLE_A))
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["dstar"], data["d"], data["t"], data["u"], data["dtotal"]) == (14, [8, 9, 10], 11, 54, 41)


def test_analyze_rejections(capsys, files, tmp_path):
    code, _, err = run(capsys, "analyze-betti", files("k.json", {"codim": 3, "F": [[1, 1, 1], [2, 2, 2], [3]]}))
    assert code == EXIT_FAIL and "NotAciRanks" in err
    code, _, _ = run(capsys, "analyze-betti", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze-betti", str(bad))[0] == EXIT_USAGE


def test_analyze_mont3_socle_example(capsys, files):
    code, out, _ = run(capsys, "analyze-betti", files("m.json", {"codim": 3, "F": [[2, 2, 2, 3], [4] * 6, [5, 5, 5]]}))
    assert code == EXIT_OK and json.loads(out)["dstar"] == 3


def test_check_aci_exit_codes(capsys, files):
    b, c = files("b.json", TABLE_B), files("c.json", TABLE_C)
    assert run(capsys, "check-aci", b)[0] == EXIT_OK
    assert run(capsys, "check-aci", c, "--min-provider", "null")[0] == EXIT_INCONCLUSIVE
    code, out, _ = run(capsys, "check-aci", c, "--min-provider", "oracle", "--seed", "0")
    assert code == EXIT_OK and json.loads(out)["m"] == [2, 2, 4]
    mutated = files("x.json", {"codim": 3, "F": [[4, 4, 6, 7], [7, 8, 10, 10, 11], [11, 15]]})
    assert run(capsys, "check-aci", mutated)[0] == EXIT_FAIL


def test_tie_rule_flag(capsys, files):
    table = files("t.json", {"codim": 3, "F": [[2, 2, 2, 2], [3, 3, 4, 4, 4], [5, 5]]})
    assert run(capsys, "check-aci", table)[0] == EXIT_FAIL
    assert run(capsys, "check-aci", table, "--tie-rule", "tie-aware")[0] == EXIT_OK


def test_randomized_commands_require_seed(capsys, files, monkeypatch):
    c = files("c.json", TABLE_C)
    code, _, err = run(capsys, "check-aci", c, "--min-provider", "oracle")
    assert code == EXIT_USAGE and "--seed" in err
    monkeypatch.setenv("ACI3_SEED", "0")
    assert run(capsys, "check-aci", c, "--min-provider", "oracle")[0] == EXIT_USAGE
    assert run(capsys, "check-aci", c, "--min-provider", "oracle", "--allow-env-seed")[0] == EXIT_OK
    monkeypatch.setenv("ACI3_SEED", "zero")
    assert run(capsys, "oracle", "sample", "2,2,2,2,2", "--allow-env-seed")[0] == EXIT_USAGE


def test_link(capsys, files):
    code, out, _ = run(capsys, "link", files("b.json", TABLE_B))
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["table"]["F"] == [[3, 4, 6, 6, 7], [6, 7, 7, 9, 10], [13]]
    assert data["same_betti_witness"]["F"] == [[3, 4, 6], [7, 9, 10], [13]]


def test_mapping_cone(capsys, files):
    g = files("g.json", {"codim": 3, "F": [[3, 4, 6, 6, 7], [6, 7, 7, 9, 10], [13]]})
    k = files("k.json", {"codim": 3, "F": [[4, 6, 7], [10, 11, 13], [17]]})
    code, out, _ = run(capsys, "mapping-cone", "--g", g, "--k", k, "--dstar", "4")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["F"][0] == [4, 4, 6, 7] and data["minimal"] is False
    assert run(capsys, "mapping-cone", "--g", g, "--k", k, "--dstar", "5")[0] == EXIT_FAIL


def test_resolve_monomial_and_realize(capsys, files):
    code, out, _ = run(capsys, "resolve-monomial", files("j.json", {"gens": [[6, 0, 0], [0, 7, 0], [0, 0, 4], [3, 1, 0]]}))
    assert code == EXIT_OK and json.loads(out)["F"] == TABLE_B["F"]
    code, out, _ = run(capsys, "realize", files("b.json", TABLE_B))
    assert code == EXIT_OK
    assert sorted(map(tuple, json.loads(out)["gens"])) == [(0, 0, 4), (0, 7, 0), (3, 1, 0), (6, 0, 0)]
    assert run(capsys, "realize", files("a.json", TABLE_A))[0] == EXIT_USAGE


def test_roundtrip(capsys, files):
    code, out, _ = run(capsys, "roundtrip", files("b.json", TABLE_B))
    assert code == EXIT_OK and json.loads(out)["match"] is True
    code, out, _ = run(capsys, "roundtrip", files("c.json", TABLE_C))
    data = json.loads(out)
    assert code == EXIT_FAIL
    assert data["error"] == "NotRealizable" and "s1=4 <= d*=5" in data["message"]
    assert run(capsys, "roundtrip", files("a.json", TABLE_A))[0] == EXIT_USAGE


def test_sweep_small(capsys, tmp_path):
    code, out, err = run(capsys, "sweep", "mont3", "--max-exponent", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 27
    assert all(r["status"] in ("pass", "inconclusive") for r in rows)
    assert json.loads(err)["fail"] == 0
    target = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "mont2", "--max-exponent", "2", "-o", str(target))
    rows = list(csv.DictReader(target.open()))
    assert code == EXIT_OK and len(rows) == 2
    assert all(r["status"] == "pass" for r in rows)
    assert rows[0].keys() >= {"a1", "b2", "oracle_match", "verdict_printed", "repro"}


def test_sweep_oracle_and_only(capsys):
    code, out, _ = run(
        capsys, "sweep", "mont3", "--max-exponent", "3", "--only", "2,2,2,1,1,1", "--min-provider", "oracle", "--seed", "0"
    )
    (row,) = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and row["status"] == "pass"
    assert run(capsys, "sweep", "mont3", "--max-exponent", "3", "--only", "2,2")[0] == EXIT_USAGE


def test_sweep_workers_give_same_rows(capsys):
    _, serial, _ = run(capsys, "sweep", "mont2", "--max-exponent", "3")
    _, parallel, _ = run(capsys, "sweep", "mont2", "--max-exponent", "3", "--workers", "2")
    assert serial == parallel


def test_sweep_bound(capsys):
    assert run(capsys, "sweep", "mont3", "--max-exponent", "7")[0] == EXIT_USAGE
    assert run(capsys, "sweep", "mont3", "--max-exponent", "0")[0] == EXIT_USAGE


def test_oracle_subcommands(capsys, files):
    I = pfaffian_gorenstein_sample((2, 2, 2, 4, 4), seed=0)
    ideal = files("i.json", I.to_json())
    code, out, _ = run(capsys, "oracle", "resolve", ideal)
    assert code == EXIT_OK and json.loads(out)["F"] == [[2, 2, 2, 4, 4], [3, 3, 5, 5, 5], [7]]
    code, out, _ = run(capsys, "oracle", "regseq", ideal, "--degrees", "2,2,5", "--seed", "0")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "yes"
    codim2 = files("c2.json", {"p": 32003, "gens": [[[1, [2, 0, 0]]], [[1, [1, 1, 0]]], [[1, [0, 2, 0]]]]})
    assert run(capsys, "oracle", "regseq", codim2, "--degrees", "2,2,3", "--seed", "0", "--trials", "2")[0] == EXIT_INCONCLUSIVE
    code, out, _ = run(capsys, "oracle", "min-delta", "2,2,2,4,4", "--seed", "0")
    assert code == EXIT_OK and json.loads(out)["min"] == [2, 2, 4]
    code, out, _ = run(capsys, "oracle", "sample", "2,2,2,2,2", "--seed", "3")
    assert code == EXIT_OK and len(json.loads(out)["gens"]) == 5


def test_oracle_colon(capsys, files):
    z = files("z.json", {"p": 32003, "gens": [[[1, [2, 0, 0]]], [[1, [0, 2, 0]]], [[1, [0, 0, 2]]]]})
    q = files("q.json", {"p": 32003, "gens": [[[1, [2, 0, 0]]], [[1, [0, 2, 0]]], [[1, [0, 0, 2]]], [[1, [1, 1, 1]]]]})
    code, out, _ = run(capsys, "oracle", "colon", "--z", z, "--q", q)
    data = json.loads(out)
    assert code == EXIT_OK and data["generator_degrees"] == [1, 1, 1]
    assert run(capsys, "oracle", "colon", "--z", q, "--q", z)[0] == EXIT_FAIL


def test_help_and_unknown(capsys):
    assert run(capsys, "--help")[0] == EXIT_OK
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE


@pytest.mark.skipif(shutil.which("acibetti") is None, reason="console script not installed")
def test_console_script(tmp_path):
    path = tmp_path / "b.json"
    path.write_text(json.dumps(TABLE_B))
    proc = subprocess.run(["acibetti", "analyze-betti", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["dstar"] == 4
