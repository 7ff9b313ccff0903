"""``wgraph`` command line: build an ideal, run the engine, verify and export."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from math import factorial

from .coxeter import CoxeterGroup, Dihedral, TypeA
from .export import GoldenMismatch, export_dot, export_json, golden_compare, render_table
from .ideal import (ConjugacyViolation, JNotInPos, induced_ideal, one_dim_ideal, parabolic_ideal,
                    regular_ideal, specht_ideal)
from .tableaux import hook_length_count
from .verify import verify_wgraph
from .wgraph import build_wgraph

SLOW_LIMIT = 5000

log = logging.getLogger("wgraph")


class UsageError(Exception):
    pass


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _group(args) -> CoxeterGroup:
    if args.m is not None and args.n is not None:
        raise UsageError("give --n (type A) or --m (dihedral), not both")
    if args.m is not None:
        if args.m < 3:
            raise UsageError("--m must be at least 3")
        return Dihedral(args.m)
    if args.n is None:
        raise UsageError("--n or --m is required")
    if args.n < 1:
        raise UsageError("--n must be positive")
    return TypeA(args.n)


def _order(group: CoxeterGroup, gens) -> int:
    """|W_gens| without enumerating it."""
    if group.kind == "I2":
        return 2 * group.m if len(set(gens)) == 2 else 2 ** len(set(gens))
    total, run, prev = 1, 0, None
    for s in sorted(gens):
        run = run + 1 if prev is not None and s == prev + 1 else 1
        prev = s
        total *= run + 1
    return total


def estimate_size(args) -> int:
    """Number of ideal elements the job would produce."""
    cmd = args.command
    if cmd == "specht":
        return hook_length_count(_ints(args.lam))
    if cmd == "onedim":
        return 1
    group = _group(args)
    if cmd == "regular":
        return _order(group, group.generators)
    if cmd == "parabolic":
        return _order(group, group.generators) // _order(group, _ints(args.J))
    if cmd == "induced":
        lam = _ints(args.lam)
        return factorial(group.n) // factorial(sum(lam)) * hook_length_count(lam)
    return 0


def _check_gens(group: CoxeterGroup, gens) -> None:
    bad = [s for s in gens if s not in group.generators]
    if bad:
        raise UsageError(f"generators {bad} out of range 1..{group.rank}")


def build_table(args):
    cmd = args.command
    if cmd == "specht":
        lam = _ints(args.lam)
        if not lam:
            raise UsageError("--lambda is required")
        if args.n is not None and args.n < sum(lam):
            raise UsageError("--n is smaller than |lambda|")
        return specht_ideal(lam, args.n)
    group = _group(args)
    if cmd == "regular":
        return regular_ideal(group)
    if cmd == "parabolic":
        J = _ints(args.J)
        _check_gens(group, J)
        return parabolic_ideal(group, J, args.variant)
    if cmd == "induced":
        if group.kind != "A":
            raise UsageError("induced ideals need a type A group")
        lam = _ints(args.lam)
        if not lam:
            raise UsageError("--lambda is required for the inner Specht ideal")
        if sum(lam) > group.n:
            raise UsageError("|lambda| exceeds --n")
        inner = specht_ideal(lam, group.n)
        return induced_ideal(range(1, sum(lam)), inner)
    if cmd == "onedim":
        J1, J2 = _ints(args.J1), _ints(args.J2)
        _check_gens(group, J1 + J2)
        return one_dim_ideal(group, J1, J2)
    raise UsageError(f"unknown command {cmd}")


def _threads(args) -> int:
    value = args.threads if args.threads is not None else os.environ.get("WGRAPH_THREADS", "1")
    try:
        n = int(value)
    except ValueError:
        raise UsageError(f"thread count must be an integer, got {value!r}") from None
    if n < 1:
        raise UsageError("thread count must be positive")
    return n


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(args) -> int:
    if args.command == "golden":
        try:
            report = golden_compare(args.path, apply_errata=not args.printed)
        except GoldenMismatch as exc:
            print(json.dumps(exc.report.to_json(), indent=1), file=sys.stderr)
            return 1
        _emit(json.dumps(report.to_json(), indent=1) + "\n", args.out)
        return 0

    threads = _threads(args)
    size = estimate_size(args)
    if size > SLOW_LIMIT and not args.slow_ok:
        raise UsageError(f"estimated {size} ideal elements exceeds {SLOW_LIMIT}; pass --slow-ok")
    log.info("building %s ideal (about %d elements, %d thread(s))", args.command, size, threads)
    table = build_table(args)
    # for a statistic alone the polynomial columns are not needed
    keep = "mu" if args.stat and args.export == "none" and args.verify == "none" else "all"
    if args.spill and args.engine != "bulk":
        raise UsageError("--spill needs --engine bulk")
    wg = build_wgraph(table, keep=keep, progress=1000 if args.verbose else 0,
                      engine=args.engine, spill=args.spill)

    status = 0
    if args.verify != "none":
        report = verify_wgraph(wg, args.verify)
        print(json.dumps(report.to_json()), file=sys.stderr)
        if not report.ok:
            status = 1
    if args.stat == "max-mu":
        print(f"max |mu| = {wg.max_abs_mu()}")
    if args.export == "json":
        _emit(export_json(wg, tables=wg.qtable.complete), args.out)
    elif args.export == "dot":
        _emit(export_dot(wg), args.out)
    elif args.export == "table":
        _emit(render_table(wg), args.out)
    return status


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank + 1 of the symmetric group")
    common.add_argument("--m", type=int, help="order of s1*s2 in a dihedral group")
    common.add_argument("--export", choices=["json", "dot", "table", "none"], default="json")
    common.add_argument("--verify", choices=["none", "relations", "full"], default="none")
    common.add_argument("--stat", choices=["max-mu"])
    common.add_argument("--slow-ok", action="store_true", help=f"allow more than {SLOW_LIMIT} elements")
    common.add_argument("--engine", choices=["reference", "bulk"], default="reference",
                        help="q-table backend; bulk is the numpy version for large ideals")
    common.add_argument("--spill", metavar="DIR", help="bulk engine: stream length levels to files in DIR")
    common.add_argument("--threads", help="worker count (env WGRAPH_THREADS); the engine runs serially")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="wgraph", description="W-graphs from W-graph ideals")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("regular", parents=[common], help="the whole group, J empty")
    p = sub.add_parser("parabolic", parents=[common], help="minimal coset representatives D_J")
    p.add_argument("--J", default="", help="comma-separated generator indices")
    p.add_argument("--variant", choices=["psi", "phi"], default="psi")
    p = sub.add_parser("specht", parents=[common], help="Specht module of a partition")
    p.add_argument("--lambda", dest="lam", help="comma-separated parts, e.g. 3,3,1")
    p = sub.add_parser("induced", parents=[common],
                       help="induce the Specht ideal of --lambda from s1..s(|lambda|-1) to S_n")
    p.add_argument("--lambda", dest="lam")
    p = sub.add_parser("onedim", parents=[common], help="the identity alone in W_{J1 u J2}")
    p.add_argument("--J1", default="")
    p.add_argument("--J2", default="")
    p = sub.add_parser("golden", help="compare the (3,3,1) engine output with the stored expansion")
    p.add_argument("--path", help="fixture file (default: bundled)")
    p.add_argument("--printed", action="store_true", help="compare against the printed values, no errata")
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return run(args)
    except (UsageError, JNotInPos, ConjugacyViolation, ValueError) as exc:
        print(f"wgraph: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
