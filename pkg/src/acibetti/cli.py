"""Command-line front end.

Exit codes: 0 valid/pass, 1 invalid/fail, 2 usage or I/O error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .aci3 import AciShape, Status, TieRule, check_characterization, check_table, decompose, extract_dstar
from .betti_core import BettiTable
from .errors import AciError
from .gorenstein3 import ci_min_provider, null_provider, validate_degree_sequence
from .liaison import LinkContext, link_aci_to_gorenstein, mapping_cone_resolution
from .monomial3 import (
    MonomialIdeal3,
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

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
MAX_SWEEP_EXPONENT = 6
SEED_ENV = "ACI3_SEED"


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_table(path: str) -> BettiTable:
    try:
        return BettiTable.from_json(_load_json(path))
    except (AciError, TypeError, ValueError, KeyError) as exc:
        raise UsageError(f"{path} is not a Betti table: {exc}") from None


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    if getattr(args, "allow_env_seed", False) and SEED_ENV in os.environ:
        try:
            return int(os.environ[SEED_ENV])
        except ValueError:
            raise UsageError(f"{SEED_ENV}={os.environ[SEED_ENV]!r} is not an integer") from None
    raise UsageError("this command is randomized: pass --seed (or --allow-env-seed with ACI3_SEED set)")


def _add_seed(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--allow-env-seed", action="store_true", help=f"fall back to ${SEED_ENV} when --seed is absent")


def _provider(args):
    if args.min_provider == "ci":
        return ci_min_provider
    if args.min_provider == "null":
        return null_provider
    from .oracle_lab.regseq import OracleMinProvider

    return OracleMinProvider(samples=args.samples, trials=args.trials, seed=_seed(args), max_entry=args.max_entry)


def cmd_check_gorenstein_degrees(args) -> int:
    degrees = _parse_ints(args.degrees)
    try:
        g = validate_degree_sequence(degrees)
    except AciError as exc:
        _emit({"delta": degrees, "verdict": "invalid", "error": type(exc).__name__, "message": str(exc)})
        return EXIT_FAIL
    _emit({"delta": list(g.delta.degrees), "theta": g.theta, "verdict": "valid"})
    return EXIT_OK


def cmd_analyze(args) -> int:
    B = _load_table(args.table)
    try:
        D = decompose(B)
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(D.to_json())
    return EXIT_OK


def cmd_check_aci(args) -> int:
    B = _load_table(args.table)
    verdict = check_table(B, _provider(args), TieRule(args.tie_rule))
    _emit(verdict.to_json())
    return verdict.exit_code


def cmd_link(args) -> int:
    B = _load_table(args.table)
    try:
        result = link_aci_to_gorenstein(decompose(B))
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(result.to_json())
    return EXIT_OK


def cmd_mapping_cone(args) -> int:
    G, K = _load_table(args.g), _load_table(args.k)
    try:
        theta_z = K.F(K.codim).shifts[-1]
        ctx = LinkContext(theta_z, args.dstar, K.codim)
        table = mapping_cone_resolution(G, K, ctx)
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(table.to_json())
    return EXIT_OK


def _load_monomial(path: str) -> MonomialIdeal3:
    try:
        return MonomialIdeal3.from_generators(_load_json(path)["gens"])
    except (AciError, TypeError, ValueError, KeyError) as exc:
        raise UsageError(f"{path} is not a monomial ideal: {exc}") from None


def cmd_resolve_monomial(args) -> int:
    J = _load_monomial(args.ideal)
    try:
        table = minimal_resolution_oracle(J)
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(table.to_json())
    return EXIT_OK


def _realize(shape: AciShape) -> MonomialIdeal3:
    if shape.t == 2:
        return realize_t2(shape)
    if shape.t == 3:
        return realize_t3(shape)
    raise UsageError(f"monomial realization is implemented for t in {{2, 3}}, not t={shape.t}")


def cmd_realize(args) -> int:
    B = _load_table(args.table)
    try:
        J = _realize(decompose(B).shape)
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit({**J.to_json(), "ideal": str(J)})
    return EXIT_OK


def roundtrip(B: BettiTable) -> dict:
    """decompose -> realize -> monomial oracle -> compare; raises on failure."""
    D = decompose(B)
    J = _realize(D.shape)
    resolved = minimal_resolution_oracle(J)
    return {"ideal": J.to_json()["gens"], "resolved": resolved.to_json(), "match": resolved == B}


def cmd_roundtrip(args) -> int:
    B = _load_table(args.table)
    try:
        out = roundtrip(B)
    except AciError as exc:
        _emit({"verdict": "fail", "error": type(exc).__name__, "message": str(exc)})
        return EXIT_FAIL
    _emit({"verdict": "pass" if out["match"] else "fail", **out})
    return EXIT_OK if out["match"] else EXIT_FAIL


SWEEP_COLUMNS = {
    "mont2": ["a1", "a2", "a3", "b1", "b2"],
    "mont3": ["a1", "a2", "a3", "b1", "b2", "b3"],
}
SWEEP_CHECKS = ["oracle_match", "dstar_match", "decomposes", "sum_identity", "roundtrip", "link_ok"]
SWEEP_TAIL = ["t", "dstar", "verdict", "verdict_printed", "printed_counterexample", "status", "repro"]


def _sweep_provider(spec: tuple):
    name = spec[0]
    if name == "null":
        return null_provider
    if name == "oracle":
        from .oracle_lab.regseq import OracleMinProvider

        return OracleMinProvider(samples=spec[1], trials=spec[2], seed=spec[3], max_entry=spec[4])
    return ci_min_provider


def sweep_row(kind: str, params: tuple[int, ...], provider_spec: tuple = ("ci",)) -> dict:
    """All checks for one monomial ACI; every check column is 0 or 1.

    ``verdict`` uses the tie-aware slot for ``d*``; ``verdict_printed`` the
    default ``p(d*)``.  Since every row is a genuine ACI, an invalid
    default-rule verdict is a counterexample to that rule and is counted
    separately rather than as a failed row.
    """
    if kind == "mont2":
        table, ideal, expected = resolution_mont2(*params), mont2_ideal(*params), params[2]
    else:
        table, ideal, expected = resolution_mont3(*params), mont3_ideal(*params), sum(params[3:])
    row = dict(zip(SWEEP_COLUMNS[kind], params))
    checks = dict.fromkeys(SWEEP_CHECKS, 0)
    checks["oracle_match"] = int(minimal_resolution_oracle(ideal) == table)
    info = extract_dstar(table)
    checks["dstar_match"] = int(info.dstar == expected)
    verdict = printed = Status.INVALID.value
    try:
        D = decompose(table)
    except AciError:
        D = None
    if D is not None:
        checks["decomposes"] = 1
        checks["sum_identity"] = int(D.shape.sum_identity_holds)
        try:
            checks["roundtrip"] = int(roundtrip(table)["match"])
        except AciError:
            pass
        try:
            checks["link_ok"] = int(link_aci_to_gorenstein(D).table.F(3).rank == 1)
        except AciError:
            pass
        provider = _sweep_provider(provider_spec)
        verdict = check_characterization(D, provider, TieRule.TIE_AWARE).status.value
        printed = check_characterization(D, provider, TieRule.PRINTED).status.value
    if not all(checks.values()) or verdict == Status.INVALID.value:
        status = "fail"
    elif verdict == Status.INCONCLUSIVE.value:
        status = "inconclusive"
    else:
        status = "pass"
    repro = "" if status != "fail" else f"acibetti sweep {kind} --max-exponent {max(params[:3])} --only {','.join(map(str, params))}"
    return {
        **row,
        **checks,
        "t": info.t,
        "dstar": info.dstar,
        "verdict": verdict,
        "verdict_printed": printed,
        "printed_counterexample": int(printed == Status.INVALID.value),
        "status": status,
        "repro": repro,
    }


def _sweep_row_star(job):
    return sweep_row(*job)


def run_sweep(kind: str, max_exponent: int, workers: int = 1, provider_spec: tuple = ("ci",), only=None) -> list[dict]:
    """Rows for every parameter tuple, sorted by the tuple whatever the worker count."""
    if only is not None:
        params_list = [tuple(only)]
    else:
        gen = mont2_parameters if kind == "mont2" else mont3_parameters
        params_list = list(gen(max_exponent))
    jobs = [(kind, p, provider_spec) for p in params_list]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row_star, jobs, chunksize=32))
    else:
        rows = [_sweep_row_star(j) for j in jobs]
    key = SWEEP_COLUMNS[kind]
    return sorted(rows, key=lambda r: tuple(r[k] for k in key))


def cmd_sweep(args) -> int:
    if not 1 <= args.max_exponent <= MAX_SWEEP_EXPONENT:
        raise UsageError(f"--max-exponent must be between 1 and {MAX_SWEEP_EXPONENT}")
    only = None
    if args.only:
        only = _parse_ints(args.only)
        if len(only) != len(SWEEP_COLUMNS[args.kind]):
            raise UsageError(f"--only needs {len(SWEEP_COLUMNS[args.kind])} integers for {args.kind}")
    try:
        spec = ("ci",) if args.min_provider == "ci" else ("null",)
        if args.min_provider == "oracle":
            spec = ("oracle", args.samples, args.trials, _seed(args), args.max_entry)
        rows = run_sweep(args.kind, args.max_exponent, args.workers, spec, only)
    except AciError as exc:
        raise UsageError(str(exc)) from None
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=SWEEP_COLUMNS[args.kind] + SWEEP_CHECKS + SWEEP_TAIL)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    counts = {s: sum(r["status"] == s for r in rows) for s in ("pass", "fail", "inconclusive")}
    counts["printed_counterexamples"] = sum(r["printed_counterexample"] for r in rows)
    print(json.dumps({"kind": args.kind, "max_exponent": args.max_exponent, "total": len(rows), **counts}), file=sys.stderr)
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def _load_ideal_fp(path: str, p: Optional[int]):
    from .oracle_lab.poly import GradedIdealFp

    try:
        return GradedIdealFp.from_json(_load_json(path), p)
    except (AciError, TypeError, ValueError, KeyError) as exc:
        raise UsageError(f"{path} is not a polynomial ideal: {exc}") from None


def cmd_oracle_resolve(args) -> int:
    from .oracle_lab.resolution import minimal_resolution_fp

    I = _load_ideal_fp(args.ideal, args.p)
    try:
        table = minimal_resolution_fp(I, args.bound)
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(table.to_json())
    return EXIT_OK


def cmd_oracle_colon(args) -> int:
    from .oracle_lab.colon import colon_ideal
    from .oracle_lab.resolution import minimal_resolution_fp

    Z, Q = _load_ideal_fp(args.z, args.p), _load_ideal_fp(args.q, args.p)
    try:
        G = colon_ideal(Z, Q, args.bound)
        out = {"ideal": G.to_json(), "generator_degrees": G.generator_degrees}
        if G.gens and G.initial_degree() > 0:
            out["table"] = minimal_resolution_fp(G).to_json()
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(out)
    return EXIT_OK


def cmd_oracle_min_delta(args) -> int:
    from .oracle_lab.regseq import probabilistic_min_provider

    delta = _parse_ints(args.delta)
    try:
        answer = probabilistic_min_provider(
            delta, args.samples, args.trials, _seed(args), max_entry=args.max_entry
        )
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if answer is None:
        _emit({"delta": delta, "min": None, "verdict": "unknown"})
        return EXIT_INCONCLUSIVE
    _emit({"delta": delta, "min": list(answer.triple), "source": answer.source})
    return EXIT_OK


def cmd_oracle_sample(args) -> int:
    from .oracle_lab.pfaffian import pfaffian_gorenstein_sample

    try:
        I = pfaffian_gorenstein_sample(_parse_ints(args.delta), _seed(args), args.p)
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(I.to_json())
    return EXIT_OK


def cmd_oracle_regseq(args) -> int:
    from .oracle_lab.regseq import regular_sequence_test

    I = _load_ideal_fp(args.ideal, args.p)
    try:
        answer = regular_sequence_test(I, _parse_ints(args.degrees), args.trials, _seed(args))
    except AciError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(answer.to_json())
    return EXIT_OK if answer.yes else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="acibetti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-gorenstein-degrees", help="validate a Gorenstein generator degree sequence")
    p.add_argument("degrees", help="comma-separated, e.g. 3,4,6,6,7")
    p.set_defaults(func=cmd_check_gorenstein_degrees)

    p = sub.add_parser("analyze-betti", help="decompose an ACI Betti table into its shape")
    p.add_argument("table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-aci", help="decide whether a table is an ACI Betti table")
    p.add_argument("table")
    p.add_argument("--min-provider", choices=["ci", "oracle", "null"], default="ci")
    p.add_argument("--tie-rule", choices=[r.value for r in TieRule], default=TieRule.PRINTED.value)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--trials", type=int, default=4)
    p.add_argument("--max-entry", type=int, default=8)
    _add_seed(p)
    p.set_defaults(func=cmd_check_aci)

    p = sub.add_parser("link", help="Betti table of the linked Gorenstein algebra")
    p.add_argument("table")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("mapping-cone", help="shift-level mapping cone of G inside K")
    p.add_argument("--g", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--dstar", type=int, required=True)
    p.set_defaults(func=cmd_mapping_cone)

    p = sub.add_parser("resolve-monomial", help="Betti table of R/J for a monomial ideal J")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_resolve_monomial)

    p = sub.add_parser("realize", help="monomial ideal with a given ACI table (t = 2 or 3)")
    p.add_argument("table")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("sweep", help="exhaustive checks over a monomial family, CSV output")
    p.add_argument("kind", choices=["mont2", "mont3"])
    p.add_argument("--max-exponent", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--min-provider", choices=["ci", "oracle", "null"], default="ci")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--max-entry", type=int, default=12)
    _add_seed(p)
    p.add_argument("--only", help="run a single parameter tuple")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("roundtrip", help="decompose, realize, resolve, compare")
    p.add_argument("table")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("oracle", help="computations over a prime field")
    osub = p.add_subparsers(dest="oracle_command", required=True)

    q = osub.add_parser("resolve", help="minimal Betti table of R/I")
    q.add_argument("ideal")
    q.add_argument("--p", type=int, default=None)
    q.add_argument("--bound", type=int, default=None)
    q.set_defaults(func=cmd_oracle_resolve)

    q = osub.add_parser("colon", help="the colon ideal Z : Q")
    q.add_argument("--z", required=True)
    q.add_argument("--q", required=True)
    q.add_argument("--p", type=int, default=None)
    q.add_argument("--bound", type=int, default=None)
    q.set_defaults(func=cmd_oracle_colon)

    q = osub.add_parser("min-delta", help="search for min(delta) in random pfaffian ideals")
    q.add_argument("delta")
    q.add_argument("--samples", type=int, default=3)
    q.add_argument("--trials", type=int, default=4)
    q.add_argument("--max-entry", type=int, default=8)
    _add_seed(q)
    q.set_defaults(func=cmd_oracle_min_delta)

    q = osub.add_parser("sample", help="random pfaffian Gorenstein ideal with generator degrees delta")
    q.add_argument("delta")
    q.add_argument("--p", type=int, default=32003)
    _add_seed(q)
    q.set_defaults(func=cmd_oracle_sample)

    q = osub.add_parser("regseq", help="look for a regular sequence of given degrees in I")
    q.add_argument("ideal")
    q.add_argument("--degrees", required=True)
    q.add_argument("--trials", type=int, default=10)
    q.add_argument("--p", type=int, default=None)
    _add_seed(q)
    q.set_defaults(func=cmd_oracle_regseq)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
