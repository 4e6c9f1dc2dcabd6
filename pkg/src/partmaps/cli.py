"""Command-line front end: classify, count, enumerate, verify.

All structured output is JSON (one record per line); counts are rendered as
decimal strings since they outgrow 64 bits quickly.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from partmaps import counting as cnt
from partmaps.classify import classify, is_idempotent, regular_in_Gamma
from partmaps.core import (
    CapExceeded,
    ParseError,
    parse_partition,
    parse_shape,
    parse_transformation,
)
from partmaps.enumeration import enum_Gamma, enum_S, enum_Sigma, enum_T
from partmaps.verify import SUITE_ORDER, SUITES


def _cmd_classify(args) -> int:
    P = parse_partition(args.partition)
    f = parse_transformation(args.map, P.n)
    report = classify(f, P)
    record = {
        "n": P.n,
        "partition": P.to_text(),
        "f": f.to_text(),
        "in_T": report.in_T,
        "in_Sigma": report.in_Sigma,
        "in_Gamma": report.in_Gamma,
        "in_S": report.in_S,
        "idempotent": report.idempotent,
        "regular_in_Gamma": report.regular_in_Gamma,
        "unit_regular_in_T": report.unit_regular_in_T,
        "unit_regular_in_Sigma": report.unit_regular_in_Sigma,
        "witness": report.witness.to_text() if report.witness else None,
        "reason": report.reason,
    }
    print(json.dumps(record))
    return 0


def _cmd_count(args) -> int:
    shape = parse_shape(args.shape)
    record = {"shape": shape.to_text()}
    if args.which in ("gamma", "all"):
        record["gamma"] = str(cnt.count_Gamma(shape))
    if args.which in ("idempotents", "all"):
        record["idempotents"] = str(cnt.count_E_Gamma(shape))
    if args.which in ("regular", "all"):
        record["regular"] = str(cnt.count_Reg_Gamma(shape))
    if args.which == "all":
        record["image_subpartitions"] = [
            {
                "r": r,
                "count": str(cnt.count_image_subpartitions(shape, r)),
                "formula": str(cnt.count_image_subpartitions_formula(shape, r)),
            }
            for r in range(1, shape.m + 1)
        ]
    print(json.dumps(record))
    return 0


def _cmd_enumerate(args) -> int:
    P = parse_partition(args.partition)
    cap = args.cap
    if args.which == "T":
        stream = enum_T(P, cap)
    elif args.which == "Sigma":
        stream = enum_Sigma(P, cap)
    elif args.which == "Gamma":
        stream = enum_Gamma(P, cap)
    elif args.which == "S":
        stream = enum_S(P, cap)
    elif args.which == "idempotents":
        stream = (f for f in enum_Gamma(P, cap) if is_idempotent(f))
    else:  # regular
        stream = (f for f in enum_Gamma(P, cap) if regular_in_Gamma(f, P))
    for f in stream:
        if args.format == "lines":
            print(f.to_text())
        elif args.format == "json":
            print(json.dumps({"images": [v + 1 for v in f.images]}))
        else:  # csv
            print(",".join(str(v + 1) for v in f.images))
    return 0


def _cmd_verify(args) -> int:
    names = args.suite or list(SUITE_ORDER)
    failed = False
    for name in SUITE_ORDER:
        if name not in names:
            continue
        result = SUITES[name](args.max_n, cap=args.cap)
        status = "pass" if result.passed else "FAIL"
        print(f"{name:<12} {status}  checks={result.checked}")
        for note in result.notes:
            print(f"{name:<12} note  {note}")
        if not result.passed:
            failed = True
            print(f"{name:<12} first failure: {result.failures[0]}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partmaps",
        description="Transformation semigroups that preserve a set partition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one map against one partition")
    p.add_argument("-p", "--partition", required=True, help="blocks, e.g. '1|2,3'")
    p.add_argument("-f", "--map", required=True, help="1-based images, e.g. '2 1 1'")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("count", help="exact counts for a block-size shape")
    p.add_argument("-s", "--shape", required=True, help="shape, e.g. '1^2,2^1'")
    p.add_argument(
        "which",
        choices=("gamma", "idempotents", "regular", "all"),
        help="which count to emit",
    )
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream semigroup members")
    p.add_argument("-p", "--partition", required=True)
    p.add_argument(
        "which",
        choices=("T", "Sigma", "Gamma", "S", "idempotents", "regular"),
        help="which family to enumerate (idempotents/regular are within Gamma)",
    )
    p.add_argument("--format", choices=("lines", "json", "csv"), default="lines")
    p.add_argument("--cap", type=int, default=None, help="override the degree cap")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run formula-vs-oracle sweeps")
    p.add_argument("--max-n", type=int, default=4, help="sweep all partitions up to this degree")
    p.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="suite to run (repeatable; default: all)",
    )
    p.add_argument("--cap", type=int, default=None, help="override the degree cap")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}; raise the limit with --cap", file=sys.stderr)
        return 2
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
