"""Command-line front end: enumeration, counting, verification, bijection tests, expansion."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import catalog
from .bijections import column_strip, column_unstrip, omega_preserved, psi_k, psi_k_inverse
from .catalog import counting
from .partitions import (D, PartitionClass, S, enumerate_partitions, format_partition,
                         omega_context, omega_weight, parse_partition, render_ferrers)

SCHEMA_VERSION = 1
CASE_PARAMS = ("k", "m", "N", "M", "mu", "nu", "variant", "which", "form")


class UsageError(Exception):
    pass


def _emit(data: dict, path: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=False)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _case_params(args) -> dict:
    return {k: getattr(args, k) for k in CASE_PARAMS if getattr(args, k, None) is not None}


def _case(args):
    try:
        return catalog.get_case(args.id, **_case_params(args))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# commands --------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    try:
        cls = PartitionClass.parse(args.cls).bounded(args.max_part, args.max_length)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    for pi in enumerate_partitions(cls, args.n):
        print(format_partition(pi))
    return 0


def cmd_count(args) -> int:
    if args.family not in counting.FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; known families: "
                         f"{', '.join(sorted(counting.FAMILIES))}")
    fam = counting.FAMILIES[args.family]
    params = {p: getattr(args, p) for p in fam.params if getattr(args, p) is not None}
    missing = [p for p in ("m",) if p in fam.params and p not in params]
    if missing:
        raise UsageError(f"family {args.family} needs --{missing[0]}")
    refined = args.i is not None or args.j is not None
    if refined and fam.markers is None:
        raise UsageError(f"family {args.family} has no (i, j) refinement")
    found = []
    for pi in counting.members(args.family, args.n, **params):
        if refined:
            i, j = counting.marker_pair(args.family, pi, **params)
            if (args.i is not None and i != args.i) or (args.j is not None and j != args.j):
                continue
        found.append(pi)
    print(len(found))
    if args.verbose:
        for pi in found:
            print(format_partition(pi))
    return 0


def cmd_verify(args) -> int:
    case = _case(args)
    report = catalog.verify(case, args.order)
    if args.json:
        _emit(dict(schemaVersion=SCHEMA_VERSION, **report.to_json()), args.json)
    print(report.summary())
    return 0 if report.ok else 1


def _verify_one(job):
    id, params, order = job
    return catalog.verify(catalog.get_case(id, **params), order).to_json()


def _threads() -> int:
    raw = os.environ.get("PARTITION_LAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"PARTITION_LAB_THREADS must be an integer, got {raw!r}") from None


def cmd_verify_all(args) -> int:
    if args.order_scale <= 0:
        raise UsageError("--order-scale must be positive")
    jobs = []
    for id in catalog.identity_ids():
        if args.only and not any(id.startswith(p) for p in args.only):
            continue
        for case in catalog.REGISTRY[id].cases():
            order = max(1, round(case.default_order * args.order_scale))
            jobs.append((case.id, case.param_dict, order))
    threads = _threads()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=4))
    else:
        reports = [_verify_one(j) for j in jobs]
    failed = [r for r in reports if r["status"] != "match"]
    for r in reports:
        if r["status"] != "match" or not args.json:
            p = ",".join(f"{k}={v}" for k, v in r["params"].items())
            print(f"{r['id']}{'[' + p + ']' if p else ''} order={r['order']} {r['status']}")
    print(f"{len(reports) - len(failed)}/{len(reports)} cases match")
    if args.json:
        _emit({"schemaVersion": SCHEMA_VERSION, "orderScale": args.order_scale,
               "cases": len(reports), "matched": len(reports) - len(failed),
               "reports": reports}, args.json)
    return 0 if not failed else 1


def _psi_failures(pi, k):
    first, second = psi_k(pi, k)
    back = psi_k_inverse(first, second, k)
    out = []
    if back != pi:
        out.append({"input": list(pi), "expected": list(pi), "got": list(back)})
    if not omega_preserved(pi, k):
        out.append({"input": list(pi), "expected": "weight preserved",
                    "got": [list(first), list(second)]})
    if len(first) + len(second) != len(pi):
        out.append({"input": list(pi), "expected": f"length {len(pi)}",
                    "got": len(first) + len(second)})
    return out


def _strip_failures(pi, k):
    a, b = column_strip(pi)
    back = column_unstrip(a, b)
    if back != pi:
        return [{"input": list(pi), "expected": list(pi), "got": list(back)}]
    return []


# map -> (domain for a given k, failure check)
BIJECTIONS = {"psi_k": (S, _psi_failures), "column_strip": (lambda k: D(), _strip_failures)}


def cmd_bijection_test(args) -> int:
    if args.map not in BIJECTIONS:
        raise UsageError(f"unknown map {args.map!r}; known maps: {', '.join(sorted(BIJECTIONS))}")
    if args.k < 1 or args.max_size < 0:
        raise UsageError("--k must be positive and --max-size nonnegative")
    domain, check = BIJECTIONS[args.map]
    cls = domain(args.k)
    checked = 0
    failures = []
    for n in range(args.max_size + 1):
        for pi in enumerate_partitions(cls, n):
            checked += 1
            failures.extend(check(pi, args.k))
    _emit({"schemaVersion": SCHEMA_VERSION, "map": args.map, "k": args.k,
           "range": [0, args.max_size], "casesChecked": checked, "failures": failures},
          args.json)
    return 0 if not failures else 1


def cmd_expand(args) -> int:
    case = _case(args)
    order = case.default_order if args.order is None else args.order
    series = (case.lhs if args.side == "lhs" else case.rhs)(order)
    if args.json:
        _emit({"schemaVersion": SCHEMA_VERSION, "id": case.id, "params": case.param_dict,
               "order": order, "side": args.side, "terms": series.to_json()}, args.json)
    else:
        print(series.to_text())
    return 0


def cmd_render(args) -> int:
    try:
        pi = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.k < 1:
        raise UsageError("--k must be positive")
    if pi:
        print(render_ferrers(pi, args.k))
    print("weight: " + omega_context(args.k).format_monomial(omega_weight(pi, args.k)))
    return 0


# parser ------------------------------------------------------------------------

def _add_params(p, names=CASE_PARAMS):
    for name in names:
        p.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partition-lab",
                                     description="Enumerate partitions and verify q-series identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the partitions of n in a class")
    p.add_argument("--class", dest="cls", required=True, help="P, D, S<k>, DS<k> or E<k>")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, default=None)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count a literal family, optionally by marker pair")
    p.add_argument("--family", required=True, help=", ".join(sorted(counting.FAMILIES)))
    p.add_argument("--n", type=int, required=True)
    _add_params(p, ("k", "m", "N", "i", "j"))
    p.add_argument("--verbose", action="store_true", help="list the members")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="verify one identity instance")
    p.add_argument("--id", required=True)
    _add_params(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="verify every registered identity instance")
    p.add_argument("--order-scale", type=float, default=1.0)
    p.add_argument("--json", default=None, metavar="PATH")
    p.add_argument("--only", nargs="*", default=None, metavar="PREFIX",
                   help="restrict to ids with these prefixes")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("bijection-test", help="exhaustive roundtrip and weight test of a map")
    p.add_argument("--map", required=True, help=", ".join(sorted(BIJECTIONS)))
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(func=cmd_bijection_test)

    p = sub.add_parser("expand", help="print one side of an identity as a canonical series")
    p.add_argument("--id", required=True)
    _add_params(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--side", choices=("lhs", "rhs"), default="rhs")
    p.add_argument("--json", default=None, metavar="PATH")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("render", help="draw a labelled Ferrers diagram")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 10,10,7,5,2")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"partition-lab {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
