"""Command-line interface: ``c34jac {gen,op,selftest,bench}``.

Exit codes: 0 success, 1 selftest failure, 2 usage or input error,
3 atypical input (after ``--retries`` resamples for random inputs).
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from pathlib import Path

from . import jacobian as J
from .curve import Curve, format_curve, load_curve, random_curve
from .divisor import DivisorRep, format_divisor, parse_divisor, random_typical, validate
from .errors import Atypical, C34Error
from .field import mk_field
from .selftest import run_selftest

EXIT_OK, EXIT_SELFTEST, EXIT_USAGE, EXIT_ATYPICAL = 0, 1, 2, 3

# Counts reported for earlier explicit formulas. Context only: those
# formulas are not implemented here, so nothing about them is measured.
PRIOR_COUNTS = [
    ("add", "145M, 2I", "150M, 2I"),
    ("double", "167M, 2I", "174M, 2I"),
]


class UsageError(Exception):
    pass


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def _curve(args) -> Curve:
    if args.curve:
        return load_curve(args.curve)
    ctx = mk_field(args.p)
    return random_curve(ctx, _rng(args.seed, "curve"))


def _given(curve: Curve, text: str | None) -> DivisorRep | None:
    if text is None:
        return None
    D = parse_divisor(text, curve.p)
    validate(curve, D)
    return D


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    curve = _curve(args)
    rng = _rng(args.seed, "divisors")
    divs = [random_typical(curve, rng) for _ in range(args.count)]
    if args.curve_out:
        Path(args.curve_out).write_text(format_curve(curve))
    if args.divisor_out:
        Path(args.divisor_out).write_text("".join(format_divisor(D) + "\n" for D in divs))
    curve_text = format_curve(curve)
    _emit(args,
          {"curve": {k: int(v) for k, v in (ln.split("=") for ln in curve_text.split())},
           "divisors": [format_divisor(D) for D in divs]},
          [curve_text.rstrip("\n"), "---"] + [format_divisor(D) for D in divs])
    return EXIT_OK


# -- op ----------------------------------------------------------------------

def _run_op(ctx, curve, kind, D1, D2, m):
    if kind == "add":
        return J.add(ctx, curve, D1, D2)
    if kind == "double":
        return J.double(ctx, curve, D1)
    if kind == "neg":
        return J.negate(ctx, curve, D1)
    if kind == "addflip":
        return J.addflip(ctx, curve, D1, D2)
    return J.scalar_mul(ctx, curve, m, D1)


def cmd_op(args) -> int:
    curve = _curve(args)
    kind = args.kind
    if kind == "smul" and args.m is None:
        raise UsageError("smul needs --m")
    given1, given2 = _given(curve, args.d1), _given(curve, args.d2)
    if kind == "add" and given1 is not None and given2 is None:
        raise UsageError("add with --d1 needs --d2 as well")
    random_inputs = given1 is None or (kind in ("add", "addflip") and given2 is None)
    rng = _rng(args.seed, "op")
    attempts = args.retries + 1 if random_inputs else 1
    for _ in range(attempts):
        D1 = given1 if given1 is not None else random_typical(curve, rng)
        D2 = given2
        if D2 is None and kind in ("add", "addflip"):
            D2 = random_typical(curve, rng)
        ctx = curve.ctx.fork()
        try:
            out = _run_op(ctx, curve, kind, D1, D2, args.m)
        except Atypical as exc:
            last = exc
            continue
        cnt = ctx.counter_read()
        _emit(args,
              {"op": kind, "d1": format_divisor(D1), "d2": D2 and format_divisor(D2),
               "result": format_divisor(out), "muls": cnt.muls, "invs": cnt.invs},
              [format_divisor(out), str(cnt)])
        return EXIT_OK
    print(f"error: {last} (after {attempts} attempt{'s' * (attempts > 1)})", file=sys.stderr)
    return EXIT_ATYPICAL


# -- selftest ----------------------------------------------------------------

def cmd_selftest(args) -> int:
    curve = _curve(args)
    if args.trials == 0:
        print("warning: 0 trials requested; every suite passes vacuously", file=sys.stderr)
    t0 = time.perf_counter()
    results = run_selftest(curve, args.trials, args.seed)
    elapsed = time.perf_counter() - t0
    failed = [r for r in results if not r.ok]
    if args.json:
        print(json.dumps({
            "p": curve.p, "trials": args.trials, "seed": args.seed, "ok": not failed,
            "suites": [{"name": r.name, "checks": r.checks, "skipped": r.skipped,
                        "failure": r.failure} for r in results],
        }, sort_keys=True))
    else:
        print(f"# selftest p={curve.p} trials={args.trials} seed={args.seed}")
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            tail = f"  {r.failure}" if r.failure else ""
            print(f"{status}\t{r.name}\tchecks={r.checks}\tskipped={r.skipped}{tail}")
        print(f"# {len(results) - len(failed)}/{len(results)} suites passed "
              f"in {elapsed:.1f}s")
    return EXIT_SELFTEST if failed else EXIT_OK


# -- bench -------------------------------------------------------------------

def _bench_inputs(curve, rng, trials, retries):
    """Input pairs on which add, double and addflip are all typical."""
    ctx = curve.ctx.fork()
    pairs = []
    budget = trials * (retries + 1)
    while len(pairs) < trials and budget:
        budget -= 1
        D1, D2 = random_typical(curve, rng), random_typical(curve, rng)
        try:
            J.add(ctx, curve, D1, D2)
            J.double(ctx, curve, D1)
        except Atypical:
            continue
        pairs.append((D1, D2))
    return pairs


def cmd_bench(args) -> int:
    curve = _curve(args)
    rng = _rng(args.seed, "bench")
    pairs = _bench_inputs(curve, rng, max(args.trials, 1), args.retries)
    if not pairs:
        print("error: no typical inputs found", file=sys.stderr)
        return EXIT_ATYPICAL
    ops = {
        "add": lambda c, a, b: J.add(c, curve, a, b),
        "double": lambda c, a, b: J.double(c, curve, a),
        "addflip": lambda c, a, b: J.addflip(c, curve, a, b),
        "addflip_double": lambda c, a, b: J.addflip(c, curve, a, a),
        "negate": lambda c, a, b: J.negate(c, curve, a),
    }
    rows = []
    for name, fn in ops.items():
        ctx = curve.ctx.fork()
        times, counts = [], set()
        for D1, D2 in pairs:
            before = ctx.counter_read()
            t0 = time.perf_counter_ns()
            fn(ctx, D1, D2)
            times.append(time.perf_counter_ns() - t0)
            counts.add((ctx.counter_read() - before).as_tuple())
        if len(counts) != 1:
            raise RuntimeError(f"{name}: op count varies with input: {sorted(counts)}")
        (muls, invs), = counts
        rows.append({"op": name, "median_ns": int(statistics.median(times)),
                     "muls": muls, "invs": invs})
    if args.json:
        print(json.dumps({
            "p": curve.p, "trials": len(pairs), "rows": rows,
            "prior_counts_not_measured": [
                {"op": op, "reported_a": a, "reported_b": b} for op, a, b in PRIOR_COUNTS],
        }, sort_keys=True))
        return EXIT_OK
    print("op\tmedian_ns\tmuls\tinvs")
    for r in rows:
        print(f"{r['op']}\t{r['median_ns']}\t{r['muls']}\t{r['invs']}")
    print("# static context, NOT measured: counts reported for earlier explicit formulas")
    for op, a, b in PRIOR_COUNTS:
        print(f"# prior {op}: {a} / {b}")
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", metavar="FILE", help="curve file (key=value lines)")
    common.add_argument("--p", type=int, default=1009,
                        help="prime for a random curve when --curve is absent (default 1009)")
    common.add_argument("--seed", type=int, default=0, help="determines all randomness")
    common.add_argument("--retries", type=int, default=8,
                        help="resamples of random inputs on atypical pivots (default 8)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="c34jac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a curve and typical divisors")
    g.add_argument("--count", type=int, default=1, help="number of divisors")
    g.add_argument("--curve-out", metavar="FILE")
    g.add_argument("--divisor-out", metavar="FILE")
    g.set_defaults(func=cmd_gen)

    o = sub.add_parser("op", parents=[common], help="run one group operation with op counts")
    o.add_argument("kind", choices=["add", "double", "neg", "addflip", "smul"])
    o.add_argument("--d1", metavar="a,b,c,d,e,f")
    o.add_argument("--d2", metavar="a,b,c,d,e,f")
    o.add_argument("--m", type=int, help="scalar for smul")
    o.set_defaults(func=cmd_op)

    s = sub.add_parser("selftest", parents=[common], help="run the invariant suites")
    s.add_argument("--trials", type=int, default=200)
    s.set_defaults(func=cmd_selftest)

    b = sub.add_parser("bench", parents=[common], help="timing and op-count table")
    b.add_argument("--trials", type=int, default=200)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "trials", 0) < 0:
        print("error: --trials must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except Atypical as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ATYPICAL
    except (C34Error, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
