"""Command-line interface.

Usage::

    consecutive-davenport compute-c --group C6 --weights full
    consecutive-davenport compute-d --group "A[4,4]" --weights full --json
    consecutive-davenport is-free --group "M(4,2,4,3)" --weights "{1}" --seq y,y,y,x,y,y,y
    consecutive-davenport construct --group "P(C2,S3)"
    consecutive-davenport sweep --csv
    consecutive-davenport verify-paper
    consecutive-davenport cache --verify-cache

Exit codes: 0 success, 1 a check failed (or the sequence is not free),
2 a result is inconclusive, 3 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

from . import catalog, regression
from .constructions import extremal_free
from .descriptors import DescriptorError, parse_group, parse_sequence, parse_weights
from .groups import Group
from .sequences import is_free, product_one_certificate
from .solver import (
    CONSECUTIVE,
    DAVENPORT,
    INFINITE,
    ConstantResult,
    SearchConfig,
    compute_consecutive,
    compute_davenport,
    conjecture_sweep,
)
from .store import ENV_VAR, ResultRecord, ResultStore, StoreConflict, default_path
from .weights import WeightSet

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3
CSV_HEADER = ["group", "weights", "value", "bound", "verdict"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit_csv(rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)


def _config(args) -> SearchConfig:
    kw = {}
    if args.max_length is not None:
        kw["max_length"] = args.max_length
    if args.max_states is not None:
        kw["max_states"] = args.max_states
    return SearchConfig(deterministic=args.deterministic or args.threads == 1, threads=args.threads, **kw)


def _group_and_weights(args) -> tuple[Group, WeightSet]:
    group = parse_group(args.group)
    return group, parse_weights(args.weights, group.exponent)


def _cache(args) -> ResultStore | None:
    path = args.cache or os.environ.get(ENV_VAR)
    return ResultStore(path) if path else None


def _result_rows(res: ConstantResult, bound) -> list:
    value = "INFINITE" if res.value == INFINITE else ("" if res.value is None else res.value)
    verdict = "EXACT" if res.conclusive else "INCONCLUSIVE"
    return [res.group, res.weights, value, bound, verdict]


def cmd_compute(args, kind: str) -> int:
    group, weights = _group_and_weights(args)
    store = _cache(args)
    res = None
    if store is not None:
        rec = store.get(group.descriptor, weights.describe(), kind)
        if rec is not None and rec.conclusive:
            res = rec.result
    if res is None:
        fn = compute_consecutive if kind == CONSECUTIVE else compute_davenport
        result = fn(group, weights, _config(args))
        if store is not None:
            store.store(ResultRecord.from_result(result))
        res = result.to_json()
    bound = group.order if 1 in weights else ""
    if args.json:
        print(json.dumps(res, sort_keys=True))
    elif args.csv:
        value = res["value"] if res["value"] is not None else ""
        _emit_csv([[res["group"], res["weights"], value, bound, "EXACT" if res["conclusive"] else "INCONCLUSIVE"]])
    else:
        name = "C" if kind == CONSECUTIVE else "D"
        if res["conclusive"]:
            print(f"{name}_{res['weights']}({res['group']}) = {res['value']}")
        else:
            print(f"{name}_{res['weights']}({res['group']}) >= {res['lower_bound']} "
                  f"(inconclusive: {res['cap_hit']} cap reached)")
        if res["witness"]:
            print(f"witness: {res['witness']}")
    return EXIT_OK if res["conclusive"] else EXIT_INCONCLUSIVE


def cmd_is_free(args) -> int:
    group, weights = _group_and_weights(args)
    seq = parse_sequence(args.seq, group)
    cert = product_one_certificate(seq, weights)
    if args.json:
        out = {"group": group.descriptor, "weights": weights.describe(), "sequence": seq.text(), "free": cert is None}
        if cert is not None:
            out["certificate"] = {"start": cert.start, "end": cert.end, "weights": list(cert.weights)}
        print(json.dumps(out, sort_keys=True))
    elif cert is None:
        print("FREE")
    else:
        print(f"NOT FREE: window {cert.start}..{cert.end} with weights {list(cert.weights)} has product 1")
    return EXIT_OK if cert is None else EXIT_FAIL


def cmd_construct(args) -> int:
    group = parse_group(args.group)
    weights = parse_weights(args.weights, group.exponent)
    seq = extremal_free(group, weights)
    free = is_free(seq, weights)
    if args.json:
        print(json.dumps({"group": group.descriptor, "weights": weights.describe(), "sequence": seq.text(),
                          "length": len(seq), "free": free}, sort_keys=True))
    else:
        print(seq.text())
        print(f"{'FREE' if free else 'NOT FREE'} (length {len(seq)}, so C_{weights}({group.descriptor}) >= {len(seq) + 1})")
    return EXIT_OK if free else EXIT_FAIL


def cmd_sweep(args) -> int:
    descs = args.group or catalog.sweep_catalog()
    rows = conjecture_sweep(catalog.load(descs), _config(args))
    if args.json:
        print(json.dumps([{"group": r.group, "order": r.order, "value": r.value, "verdict": r.verdict} for r in rows]))
    elif args.csv:
        _emit_csv([r.csv_row() for r in rows])
    else:
        for r in rows:
            print(f"{r.group:<24} |G| = {r.order:<4} C(G) = {r.value!s:<4} {r.verdict}")
    if any(r.verdict == "INCONCLUSIVE" for r in rows):
        return EXIT_INCONCLUSIVE
    return EXIT_OK if all(r.verdict == "EQUAL" for r in rows) else EXIT_FAIL


def cmd_verify_paper(args) -> int:
    numbers = [int(v) for v in args.only.split(",")] if args.only else None
    outcomes = regression.run_all(numbers)
    if args.json:
        print(json.dumps([
            {"criterion": o.number, "title": o.title, "passed": o.passed, "conclusive": o.conclusive,
             "cases": len(o.cases), **({} if args.deterministic else {"elapsed_s": round(o.elapsed, 3)})}
            for o in outcomes
        ], sort_keys=True))
    else:
        for o in outcomes:
            status = "PASS" if o.passed else ("INCONCLUSIVE" if not o.conclusive else "FAIL")
            timing = "" if args.deterministic else f"  [{o.elapsed:.2f}s]"
            print(f"{status:<12} {o.number:>2}  {o.title}  ({len(o.cases)} cases){timing}")
            if args.verbose or not o.passed:
                for c in o.cases:
                    if args.verbose or not c.ok or not c.conclusive:
                        print(f"    {'ok ' if c.ok else 'BAD'} {c.label}: expected {c.expected}, got {c.got}")
    if not all(o.conclusive for o in outcomes):
        return EXIT_INCONCLUSIVE
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAIL


def cmd_cache(args) -> int:
    store = ResultStore(args.cache or default_path())
    bad = 0
    for rec in store.records():
        line = f"{rec.kind:<12} {rec.group:<20} {rec.weights:<16} {rec.result.get('value')}"
        if args.verify_cache and rec.conclusive:
            group = parse_group(rec.group)
            weights = parse_weights(rec.weights, group.exponent)
            fn = compute_consecutive if rec.kind == CONSECUTIVE else compute_davenport
            again = fn(group, weights).to_json()
            same = again["value"] == rec.result["value"]
            bad += not same
            line += "  reproduced" if same else f"  MISMATCH (now {again['value']})"
        print(line)
    if store.corrupt:
        print(f"{store.corrupt} corrupt line(s) skipped", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="consecutive-davenport", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, weights=True, search=True):
        p.add_argument("--group", required=True, help="group descriptor, e.g. C6, A[2,4], M(4,2,4,3), P(C2,S3)")
        if weights:
            p.add_argument("--weights", default="{1}", help="weight descriptor (default {1})")
        if search:
            p.add_argument("--max-length", type=int)
            p.add_argument("--max-states", type=int)
            p.add_argument("--threads", type=int, default=1)
        p.add_argument("--deterministic", action="store_true")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        fmt.add_argument("--csv", action="store_true")
        p.add_argument("--cache", help=f"results file (default ${ENV_VAR} or ./results.jsonl)")

    for name, kind in (("compute-c", CONSECUTIVE), ("compute-d", DAVENPORT)):
        p = sub.add_parser(name, help=f"compute the {kind} constant")
        common(p)
        p.set_defaults(func=lambda a, k=kind: cmd_compute(a, k))

    p = sub.add_parser("is-free", help="decide weighted consecutive freeness of a sequence")
    common(p, search=False)
    p.add_argument("--seq", required=True, help="comma-separated elements")
    p.set_defaults(func=cmd_is_free)

    p = sub.add_parser("construct", help="print the explicit extremal free sequence")
    common(p, search=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sweep", help="compare C(G) with |G| over a catalog")
    p.add_argument("--group", action="append", help="restrict to these descriptors (repeatable)")
    for flag in ("--max-length", "--max-states"):
        p.add_argument(flag, type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--deterministic", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--cache")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-paper", help="run the regression table of known values")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--deterministic", action="store_true", help="omit timings so reports are byte-identical")
    p.add_argument("--verbose", "-v", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cache")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("cache", help="list stored results")
    p.add_argument("--cache")
    p.add_argument("--verify-cache", action="store_true", help="recompute conclusive records and compare")
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DescriptorError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StoreConflict as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
