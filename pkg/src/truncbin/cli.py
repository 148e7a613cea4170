"""Command-line front end.

Exit status: 0 on success, 1 when a check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import kernels
from .certify import certify
from .modp import DEFAULT_PRIME_BUDGET
from .newton import dumas_degree_set, newton_polygon, np_for_cj
from .poly import IntPoly, shifted_coeffs, taylor_shift, build_pnk, verify_alt_sum, \
    verify_simple_roots_identity
from .primes import DEFAULT_FACTOR_BOUND
from .roots import pairwise_distinct_check
from .survey import counting_chain, parse_a_option, render, summarize, survey_records
from .thue import scan_all


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_certify(args) -> int:
    a = parse_a_option(args.a)
    if isinstance(a, tuple):
        if len(a) != args.k + 1:
            raise UsageError(f"--a csv list needs {args.k + 1} entries")
    t0 = time.perf_counter_ns()
    cert = certify(args.n, args.k, a, args.prime_budget, args.factor_bound)
    elapsed = (time.perf_counter_ns() - t0) // 1000
    _emit({"n": args.n, "k": args.k, **cert.to_json(), "elapsed_us": elapsed})
    return 0


def cmd_survey(args) -> int:
    a = parse_a_option(args.a)
    records = survey_records(args.max_n, a=a, jobs=args.jobs, prime_budget=args.prime_budget,
                             factor_bound=args.factor_bound, timing=not args.no_timing,
                             min_n=args.min_n)
    sys.stdout.write(render(records, args.out))
    summary = summarize(records, args.max_n)
    if args.summary:
        with open(args.summary, "w") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
    else:
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if args.require_all and summary["unresolved"]:
        return 1
    return 0


def cmd_polygon(args) -> int:
    if args.poly is not None:
        f = IntPoly.parse(args.poly)
        np_ = newton_polygon(f, args.p)
    elif args.n is not None and args.k is not None:
        if args.p <= args.k:
            np_ = newton_polygon(IntPoly(shifted_coeffs(args.n, args.k)), args.p)
        else:
            np_ = np_for_cj(args.n, args.k, args.p)
    else:
        raise UsageError("give --poly, or --n and --k")
    out = np_.to_json()
    out["irreducible"] = dumas_degree_set(np_).is_trivial
    _emit(out)
    return 0


def cmd_gaps(args) -> int:
    chain = counting_chain(args.n)
    _emit(chain)
    return 0 if chain["W"] <= chain["sum_3delta"] else 1


def cmd_distinct(args) -> int:
    ok = True
    for n in range(max(2, args.min_n), args.n + 1):
        rep = pairwise_distinct_check(n)
        ok &= rep.all_distinct
        _emit(rep.to_json())
    return 0 if ok else 1


def cmd_thue(args) -> int:
    cases = (2, 3) if args.case == "all" else (int(args.case),)
    ok = True
    for row in scan_all(args.k, args.bound, cases):
        sols = row.pop("solutions")
        for s in sols:
            c = args.k if row["case"] == 3 else args.k - 2
            ok &= row["a"] * s.x ** row["d"] - row["b"] * s.y ** row["d"] == c
        if sols or not args.nonempty:
            _emit({**row, "solutions": [[s.x, s.y, s.n] for s in sols],
                   "note": "solutions with x, y <= bound"})
    return 0 if ok else 1


def cmd_identities(args) -> int:
    checks = [
        ("alt_sum", ((a, b) for b in range(args.max_b + 1) for a in range(b + 1)),
         lambda a, b: verify_alt_sum(a, b)),
        ("shift", ((n, k) for n in range(2, args.max_n + 1) for k in range(1, n)),
         lambda n, k: list(taylor_shift(build_pnk(n, k), -1).coeffs) == shifted_coeffs(n, k)),
        ("simple_roots", ((n, k) for n in range(2, args.max_n + 1) for k in range(1, n)),
         verify_simple_roots_identity),
    ]
    for name, cases, fn in checks:
        count = 0
        for case in cases:
            count += 1
            if not fn(*case):
                _emit({"suite": name, "ok": False, "first_failure": list(case)})
                return 1
        _emit({"suite": name, "ok": True, "cases": count})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="truncbin", description=__doc__)
    ap.add_argument("--version", action="version",
                    version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--a", default="ones", help="ones | factorial | csv:<list>")
        p.add_argument("--prime-budget", type=int, default=DEFAULT_PRIME_BUDGET)
        p.add_argument("--factor-bound", type=int, default=DEFAULT_FACTOR_BOUND)

    p = sub.add_parser("certify", help="certify one (n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("survey", help="certify every (n, k) up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--out", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="write 0 in the micros column")
    p.add_argument("--summary", help="write the summary JSON here instead of stderr")
    p.add_argument("--require-all", action="store_true", help="exit 1 if any pair is unresolved")
    common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("polygon", help="Newton polygon and degree set")
    p.add_argument("--poly", help='ascending coefficients, e.g. "4,4,1"')
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("gaps", help="prime-gap statistics and counting chain")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("distinct-roots", help="root distinctness across k, per n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=2)
    p.set_defaults(func=cmd_distinct)

    p = sub.add_parser("thue-scan", help="bounded Thue equation scans for fixed k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--case", choices=["2", "3", "all"], default="all")
    p.add_argument("--nonempty", action="store_true", help="only print rows with solutions")
    p.set_defaults(func=cmd_thue)

    p = sub.add_parser("identities", help="exact identity suites")
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--max-b", type=int, default=200)
    p.set_defaults(func=cmd_identities)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"truncbin {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
