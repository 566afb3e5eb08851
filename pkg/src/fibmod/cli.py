"""Command-line front end.

Commands:

    fib       exact or modular Fibonacci values
    profile   period / rank / zero-count profile of a modulus
    good      good-number classification (direct, fast, or both routes)
    wss-scan  checkpointed Wall-Sun-Sun prime scan over a range
    verify    run the property suites over a bounded range

With --json, exactly one JSON document (the CommandResult: command, inputs,
output, elapsed_ms) is written to stdout and any human-readable text goes
to stderr.  Exit codes: 0 success, 1 usage, 2 I/O, 3 WSS hit found,
4 theorem/criterion anomaly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict

from . import classify, pisano, verify, wss
from .errors import AnomalyError, CheckpointError
from .fib import FIB_EXACT_CAP, fib_exact, fib_pair_mod

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_WSS_HIT = 3
EXIT_ANOMALY = 4

CHECKPOINT_DIR_ENV = "FIBMOD_CHECKPOINT_DIR"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fibmod", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="Fibonacci value, exact or mod m")
    p.add_argument("n", type=int)
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("profile", help="period / rank / zero count of m")
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("good", help="good-number classification")
    p.add_argument("m", type=int, nargs="?", default=None)
    p.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"), default=None)
    p.add_argument("--method", choices=("direct", "fast", "both"), default="both")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("wss-scan", help="scan primes for the Wall-Sun-Sun property")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--block-size", type=int, default=wss.DEFAULT_BLOCK_SIZE)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=verify.SUITE_NAMES, required=True)
    p.add_argument("--max", dest="max_value", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    return parser


def _emit(args, command: str, inputs: dict, output, elapsed_ms: float, human: str) -> None:
    if args.json:
        doc = {
            "command": command,
            "inputs": inputs,
            "output": output,
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(human)


def _cmd_fib(args) -> int:
    if args.n < 0:
        raise ValueError("index must be >= 0")
    t0 = time.perf_counter()
    if args.mod is None:
        if args.n > FIB_EXACT_CAP:
            raise ValueError(
                f"index {args.n} exceeds the exact cap {FIB_EXACT_CAP}; use --mod"
            )
        value = fib_exact(args.n)
        output = {"n": args.n, "value": value}
        human = str(value)
    else:
        value = fib_pair_mod(args.n, args.mod)[0]
        output = {"n": args.n, "mod": args.mod, "value": value}
        human = str(value)
    elapsed = (time.perf_counter() - t0) * 1000
    _emit(args, "fib", {"n": args.n, "mod": args.mod}, output, elapsed, human)
    return EXIT_OK


def _cmd_profile(args) -> int:
    if args.m < 2:
        raise ValueError("profile needs m >= 2")
    t0 = time.perf_counter()
    prof = pisano.profile(args.m)
    elapsed = (time.perf_counter() - t0) * 1000
    output = {"m": prof.m, "gamma": prof.gamma, "alpha": prof.alpha, "upsilon": prof.upsilon}
    human = (
        f"m={prof.m} period={prof.gamma} rank={prof.alpha} zero_count={prof.upsilon}"
    )
    _emit(args, "profile", {"m": args.m}, output, elapsed, human)
    return EXIT_OK


def _report_payload(report: classify.GoodnessReport) -> dict:
    payload = asdict(report)
    payload["prime_entries"] = [asdict(e) for e in report.prime_entries]
    return payload


def _cmd_good(args) -> int:
    if (args.m is None) == (args.range is None):
        raise ValueError("give exactly one of: a single m, or --range LO HI")
    t0 = time.perf_counter()
    if args.m is not None:
        lo = hi = args.m
    else:
        lo, hi = args.range
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got ({lo}, {hi})")
    reports = [classify.goodness_report(m, method=args.method) for m in range(lo, hi + 1)]
    elapsed = (time.perf_counter() - t0) * 1000
    if args.m is not None:
        output = _report_payload(reports[0])
        human = f"m={args.m} good={reports[0].is_good} (method={args.method})"
    else:
        good = [r.m for r in reports if r.is_good]
        output = {
            "lo": lo,
            "hi": hi,
            "method": args.method,
            "checked": len(reports),
            "good": good,
        }
        human = f"[{lo}, {hi}]: {len(good)} good numbers (method={args.method})"
    _emit(
        args,
        "good",
        {"m": args.m, "range": args.range, "method": args.method},
        output,
        elapsed,
        human,
    )
    return EXIT_OK


def _default_checkpoint_path(lo: int, hi: int) -> str:
    directory = os.environ.get(CHECKPOINT_DIR_ENV, ".")
    return os.path.join(directory, f"wss-scan-{lo}-{hi}.checkpoint.json")


def _cmd_wss_scan(args) -> int:
    checkpoint = args.checkpoint or _default_checkpoint_path(args.lo, args.hi)
    t0 = time.perf_counter()
    ck = wss.scan_wss(
        args.lo,
        args.hi,
        workers=args.jobs,
        checkpoint_path=checkpoint,
        results_path=args.out,
        block_size=args.block_size,
    )
    elapsed = (time.perf_counter() - t0) * 1000
    output = {
        "range_lo": ck.range_lo,
        "range_hi": ck.range_hi,
        "last_completed": ck.last_completed,
        "hits": [asdict(h) for h in ck.hits],
        "anomaly_count": ck.anomaly_count,
        "wall_time_seconds": ck.wall_time_seconds,
        "checkpoint": checkpoint,
    }
    human = (
        f"scanned [{ck.range_lo}, {ck.range_hi}] "
        f"hits={len(ck.hits)} anomalies={ck.anomaly_count} checkpoint={checkpoint}"
    )
    inputs = {
        "from": args.lo,
        "to": args.hi,
        "jobs": args.jobs,
        "checkpoint": checkpoint,
        "out": args.out,
    }
    _emit(args, "wss-scan", inputs, output, elapsed, human)
    if ck.hits:
        print(f"WALL-SUN-SUN HIT: {[h.p for h in ck.hits]}", file=sys.stderr)
        return EXIT_WSS_HIT
    if ck.anomaly_count:
        print(f"criterion anomalies: {ck.anomaly_count}", file=sys.stderr)
        return EXIT_ANOMALY
    return EXIT_OK


def _cmd_verify(args) -> int:
    t0 = time.perf_counter()
    results = verify.run_suites(args.suite, args.max_value, seed=args.seed)
    elapsed = (time.perf_counter() - t0) * 1000
    stream = sys.stderr if args.json else sys.stdout
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name} (checked={r.checked})"
        if not r.passed:
            line += f" counterexamples: {'; '.join(r.failures)}"
        print(line, file=stream)
    failed = [r for r in results if not r.passed]
    output = {
        "suite": args.suite,
        "max": args.max_value,
        "seed": args.seed,
        "passed": not failed,
        "results": [asdict(r) for r in results],
    }
    human = f"{len(results) - len(failed)}/{len(results)} properties passed"
    _emit(
        args,
        "verify",
        {"suite": args.suite, "max": args.max_value, "seed": args.seed},
        output,
        elapsed,
        human,
    )
    return EXIT_ANOMALY if failed else EXIT_OK


_HANDLERS = {
    "fib": _cmd_fib,
    "profile": _cmd_profile,
    "good": _cmd_good,
    "wss-scan": _cmd_wss_scan,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"fibmod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointError as exc:
        print(f"fibmod: checkpoint error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"fibmod: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except AnomalyError as exc:
        print(f"fibmod: ANOMALY: {exc}", file=sys.stderr)
        return EXIT_ANOMALY


if __name__ == "__main__":
    sys.exit(main())
