"""Command-line front end.

Subcommands:

* ``compute`` -- one component or moduli invariant, rendered as plain text,
  JSON, or display-style latex;
* ``verify``  -- run the whole verification harness and report each check;
* ``table``   -- a family of invariants, one row per parameter value.

Exit codes: 0 success, 2 invalid parameters, 3 internal inconsistency
(an exactness guarantee failed, i.e. an implementation bug), 1 verification
failures or unexpected errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from .cayley import (METHOD_BOTH, METHOD_CLOSED, METHOD_PIPELINE, ComponentSpec,
                     compute_component)
from .errors import HiggsICError, InternalInconsistencyError
from .pipeline import SPECIALIZE_EARLY, SYMBOLIC_LATE
from .records import JobKey, ResultCache, record_from_polynomial, render
from .verify import format_report, run_all

MODES = {"early": SPECIALIZE_EARLY, "late": SYMBOLIC_LATE}
METHODS = {"pipeline": METHOD_PIPELINE, "closed": METHOD_CLOSED, "both": METHOD_BOTH}


class UsageError(HiggsICError):
    pass


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"group {args.group!r} requires --{name}")


def _reject(args, names):
    for name in names:
        if getattr(args, name) is not None:
            raise UsageError(f"group {args.group!r} does not take --{name}")


def _compute_one(args):
    group = "so0-nn2" if args.group == "so-odd" else args.group
    if group in ("gl", "pgl"):
        _require(args, ("rank", "genus", "twist"))
    elif group == "e6":
        _require(args, ("genus",))
        _reject(args, ("rank", "twist"))
    else:
        _require(args, ("rank", "genus"))
        if group not in ("unn", "punn"):
            _reject(args, ("twist",))
    spec = ComponentSpec(group=group, n=args.rank, g=args.genus, l=args.twist)
    return compute_component(spec, METHODS[args.method], MODES[args.mode], args.jobs)


def _job_key(args) -> JobKey:
    # truncation order: the rank of the underlying partition series
    order = {"gl": args.rank, "pgl": args.rank, "unn": args.rank, "punn": args.rank,
             "so0-nn2": 2, "so-odd": 2, "e6": 3}.get(args.group)
    mode_label = args.mode
    if args.group in ("so0-nn2", "so-odd", "e6"):
        mode_label = f"{args.mode}/{args.method}"
    twist = args.twist
    if twist is None:
        twist = {"unn": 2, "punn": 2, "so0-nn2": args.rank, "so-odd": args.rank,
                 "e6": 4}.get(args.group)
    return JobKey(group=args.group, n=args.rank, g=args.genus, l=twist,
                  mode=mode_label, order=order)


def cmd_compute(args) -> int:
    cache = ResultCache(args.cache_dir) if args.cache_dir else None
    key = _job_key(args)
    record = cache.get(key) if cache else None
    if record is None:
        t0 = time.monotonic()
        poly = _compute_one(args)
        record = record_from_polynomial(poly, key,
                                        wall_time_ms=int((time.monotonic() - t0) * 1000))
        if cache:
            cache.put(key, record)
    print(render(record, args.format))
    return 0


def cmd_verify(args) -> int:
    criteria = run_all(corpus_path=args.corpus, jobs=args.jobs, only=args.only)
    report, all_ok = format_report(criteria, only=args.only)
    print(report)
    print("VERIFICATION:", "all checks passed" if all_ok else "some checks FAILED")
    return 0 if all_ok else 1


def _table_rows(args):
    if args.group in ("gl", "pgl", "unn", "punn"):
        _require(args, ("rank", "genus"))
        for n in range(1, args.rank + 1):
            row = argparse.Namespace(**vars(args))
            row.rank = n
            yield row
    elif args.group in ("so", "so0", "so012"):
        _require(args, ("rank", "genus"))
        for n in range(2, args.rank + 1):
            row = argparse.Namespace(**vars(args))
            row.rank = n
            yield row
    elif args.group in ("so0-nn2", "so-odd"):
        _require(args, ("rank", "genus"))
        for n in range(3, args.rank + 1, 2):
            row = argparse.Namespace(**vars(args))
            row.rank = n
            yield row
    elif args.group == "e6":
        _require(args, ("genus",))
        for g in range(2, args.genus + 1):
            row = argparse.Namespace(**vars(args))
            row.genus = g
            yield row
    else:
        raise UsageError(f"unknown group {args.group!r}")


def cmd_table(args) -> int:
    for row in _table_rows(args):
        poly = _compute_one(row)
        key = JobKey(group=row.group, n=row.rank, g=row.genus, l=row.twist, mode=row.mode)
        record = record_from_polynomial(poly, key)
        params = ", ".join(f"{k}={v}" for k, v in
                           (("n", row.rank), ("g", row.genus), ("l", row.twist)) if v is not None)
        print(f"{row.group}[{params}]: {render(record, args.format)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgs-ic",
        description="Exact intersection-cohomology Poincare and Hodge polynomials of "
                    "twisted Higgs moduli spaces and higher rank Teichmueller components.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_method=True):
        p.add_argument("--group", required=True,
                       choices=["gl", "pgl", "unn", "punn", "so", "so0", "so012",
                                "so0-nn2", "so-odd", "e6"],
                       help="component family or moduli group")
        p.add_argument("--rank", "-n", type=int, default=None,
                       help="rank / size parameter n")
        p.add_argument("--genus", "-g", type=int, default=None, help="curve genus (>= 2)")
        p.add_argument("--twist", "-l", type=int, default=None,
                       help="twist exponent l (gl/pgl only)")
        if with_method:
            p.add_argument("--method", choices=sorted(METHODS), default="both",
                           help="route for dual-route components")
        p.add_argument("--mode", choices=sorted(MODES), default="early",
                       help="Weil-variable specialization mode")
        p.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
        p.add_argument("--cache-dir", default=None, help="directory for the result cache")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers for series terms")

    p_compute = sub.add_parser("compute", help="compute one invariant")
    common(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_verify = sub.add_parser("verify", help="run the verification harness")
    p_verify.add_argument("--corpus", default=None, help="override the reference corpus file")
    p_verify.add_argument("--only", default=None, help="restrict to checks whose name contains this")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="tabulate a family (up to --rank / --genus)")
    common(p_table)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency (implementation bug): {exc}", file=sys.stderr)
        return 3
    except HiggsICError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
