"""Command-line front end.

Exit codes: 0 success, 1 input error (malformed JSON, unknown suite),
2 precondition violation, 3 no inverse, 4 budget exceeded,
5 verification failure (a suite found failures, or a replayed instance
still fails, or a solver contradicted itself).
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceededError, InternalInconsistencyError, PreconditionError
from .harness.generate import InstanceSpace
from .harness.oracle import oracle_search
from .harness.suites import SUITES, UnknownSuiteError, replay, run_suite
from .io import InputError, load_context, parse_ring, read_json
from .weighted import (KINDS, InverseReport, along_d, annihilator_inverse, bc_exists, bc_inverse,
                       bott_duffin, bott_duffin_necessary, hybrid_exists, hybrid_inverse)

OK, INPUT, PRECONDITION, NONEXISTENT, BUDGET, FAILED = range(6)


def _emit(obj, out_path: str | None):
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _scan(args):
    return {"auto": None, "on": True, "off": False}[args.scan]


def compute_report(kind: str, ctx, scan=None) -> InverseReport:
    if kind == "bc":
        return bc_inverse(ctx, scan=scan)
    if kind == "hybrid":
        return hybrid_inverse(ctx, scan=scan)
    if kind == "annihilator":
        return annihilator_inverse(ctx, scan=scan)
    if kind == "bott-duffin":
        return bott_duffin(ctx, scan=scan)
    return along_d(ctx.a, ctx.b, ctx.v, ctx.w, scan=scan)


def cmd_compute(args) -> int:
    ctx = load_context(read_json(args.input), args.kind)
    rep = compute_report(args.kind, ctx, _scan(args))
    _emit(rep.to_json(), args.out)
    return OK if rep.exists else NONEXISTENT


def cmd_check(args) -> int:
    kind = args.kind
    ctx = load_context(read_json(args.input), kind)
    certs = []
    if kind in ("bc", "along-d"):
        exists, cert = bc_exists(ctx)
        certs = [cert] if cert else []
    elif kind == "hybrid":
        exists, cert = hybrid_exists(ctx)
        certs = [cert] if cert else []
    elif kind == "annihilator":
        exists = annihilator_inverse(ctx, scan=False).exists
    else:
        exists = bott_duffin(ctx, scan=False).exists
        nec, cert = bott_duffin_necessary(ctx)
        certs = [cert] if cert else []
    _emit({"kind": kind, "exists": exists, "certificates": [c.to_json() for c in certs]}, args.out)
    return OK if exists else NONEXISTENT


def cmd_oracle(args) -> int:
    ctx = load_context(read_json(args.input), args.kind)
    found = sorted(oracle_search(args.kind, ctx), key=lambda m: m.data)
    _emit([m.entries_json() for m in found], args.out)
    return OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UnknownSuiteError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    space = InstanceSpace(parse_ring(args.ring), args.k, args.mode, args.seed, args.count)
    res = run_suite(args.suite, space, jobs=args.jobs, min_tested=args.min_tested)
    _emit(res.to_json(), args.out)
    return OK if res.passed else FAILED


def cmd_replay(args) -> int:
    obj = read_json(args.input)
    if args.suite:
        obj = {"suite": args.suite, "instance": obj.get("instance", obj)}
    if "suite" not in obj or "instance" not in obj:
        raise InputError("replay needs a failure record with 'suite' and 'instance'")
    res = replay(obj)
    _emit(res, args.out)
    return FAILED if res["status"] == "fail" else OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wbc", description="Exact weighted (b,c)-inverses.")
    sub = p.add_subparsers(dest="command", required=True)

    def ctx_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--kind", required=True, choices=KINDS)
        sp.add_argument("--in", dest="input", required=True,
                        help="context JSON file, or inline JSON")
        sp.add_argument("--out", help="also write the JSON result here")
        sp.set_defaults(func=fn)
        return sp

    ctx_cmd("compute", cmd_compute, "compute an inverse").add_argument(
        "--scan", choices=("auto", "on", "off"), default="auto",
        help="exhaustive uniqueness scan (auto: small finite rings only)")
    ctx_cmd("check", cmd_check, "decide existence only")
    ctx_cmd("oracle", cmd_oracle, "enumerate every solution by brute force")

    v = sub.add_parser("verify", help="run a theorem suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--ring", default="gfp:2", help="q, gfp:P or zn:N")
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=500)
    v.add_argument("--min-tested", type=int, default=None,
                   help="random mode: draw until this many instances are tested")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("replay", help="re-run a failure record from verify")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--suite", help="suite name, when the record lacks one")
    r.add_argument("--out")
    r.set_defaults(func=cmd_replay)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors; report as input error
        return OK if exc.code == 0 else INPUT
    try:
        return args.func(args)
    except (InputError, UnknownSuiteError) as exc:
        return _fail(INPUT, exc)
    except PreconditionError as exc:
        return _fail(PRECONDITION, exc)
    except BudgetExceededError as exc:
        return _fail(BUDGET, exc)
    except InternalInconsistencyError as exc:
        return _fail(FAILED, exc)
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(INPUT, exc)


def _fail(code: int, exc: Exception) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit": code}))
    return code


if __name__ == "__main__":
    sys.exit(main())
