"""Command-line interface.

Exit codes: 0 success; 1 a verification failed (structural check, oracle
mismatch, cross-mode disagreement); 2 invalid input; 3 a cost guard refused
the work.  With --json the only thing on stdout is one JSON document.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .batch import DEFAULT_SEED, fits_int64, oracle_diff, sample_permutations, t_fast_batch
from .catalog import (
    CatalogRecord,
    default_catalog_path,
    export_sequence,
    read_records,
    write_record,
)
from .errors import CatalogError, CostBoundError, InputError, VerificationError
from .perms import format_permutation, parse_permutation, run_stats, t_bruteforce
from .search import (
    EXHAUSTIVE_LIMIT,
    PRUNED_LIMIT,
    RCResult,
    enumerate_rc_exhaustive,
    enumerate_rc_pruned,
)
from .stats import t_fast
from .structure import CHECK_IDS, CONVENTIONS, verify_structure

_CHECK_TOKENS = {
    "t1": "T1-alternating",
    "t2": "T2-endpoints",
    "t3": "T3-parity",
    "c1": "C1-classes",
    "t5": "T5-recursive",
}


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _parse_checks(raw: str) -> tuple[str, ...]:
    tokens = [tok.strip().lower() for tok in raw.split(",") if tok.strip()]
    if not tokens:
        raise InputError("no checks requested")
    if "all" in tokens:
        return CHECK_IDS
    try:
        wanted = tuple(_CHECK_TOKENS[tok] for tok in tokens)
    except KeyError as e:
        raise InputError(
            f"unknown check {e.args[0]!r}; expected all or {'|'.join(_CHECK_TOKENS)}"
        ) from None
    # keep canonical order, drop repeats
    return tuple(cid for cid in CHECK_IDS if cid in wanted)


def _print_result(rc: RCResult) -> None:
    print(
        f"n={rc.n} mode={rc.mode} max_t={rc.max_t} "
        f"members={len(rc.members)} explored={rc.explored}"
    )
    for m in rc.members:
        print(f"  {format_permutation(m)}")


def cmd_stat(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    rs = run_stats(p)
    out: dict = {
        "permutation": format_permutation(p),
        "n": len(p),
        "inc": rs.inc,
        "dec": rs.dec,
        "id": rs.id,
    }
    if args.method in ("fast", "both"):
        out["t_fast"] = str(t_fast(p))
    if args.method in ("brute", "both"):
        out["t_bruteforce"] = str(t_bruteforce(p, allow_large=args.allow_large))
    code = 0
    if args.method == "both":
        out["agree"] = out["t_fast"] == out["t_bruteforce"]
        if not out["agree"]:
            code = 1
    if args.json:
        _emit(out)
        return code
    print(f"permutation {out['permutation']}")
    print(f"inc={rs.inc} dec={rs.dec} id={rs.id}")
    for key in ("t_bruteforce", "t_fast"):
        if key in out:
            print(f"{key}={out[key]}")
    if "agree" in out:
        print(f"agree={'true' if out['agree'] else 'false'}")
    return code


def cmd_enumerate(args: argparse.Namespace) -> int:
    results: dict[str, RCResult] = {}
    if args.mode in ("exhaustive", "both"):
        results["exhaustive"] = enumerate_rc_exhaustive(
            args.n,
            shard_count=args.shards,
            allow_large=args.allow_large,
            paranoid=args.paranoid,
        )
    if args.mode in ("pruned", "both"):
        results["pruned"] = enumerate_rc_pruned(
            args.n,
            shard_count=args.shards,
            recursive_filter=not args.no_recursive_filter,
            allow_large=args.allow_large,
        )
    code = 0
    agree = None
    if args.mode == "both":
        a, b = results["exhaustive"], results["pruned"]
        agree = a.max_t == b.max_t and a.members == b.members
        if not agree:
            code = 1
    written = None
    if args.out is not None:
        store = default_catalog_path() if args.out == "" else Path(args.out)
        for rc in results.values():
            write_record(CatalogRecord.from_result(rc), store, force=args.force)
        written = str(store)
    if args.json:
        if args.mode == "both":
            doc: dict = {mode: rc.to_json_dict() for mode, rc in results.items()}
            doc["agree"] = agree
        else:
            doc = results[args.mode].to_json_dict()
        if written is not None:
            doc["store"] = written
        _emit(doc)
        return code
    for rc in results.values():
        _print_result(rc)
    if agree is not None:
        print(f"modes agree: {'yes' if agree else 'NO'}")
    if written is not None:
        print(f"wrote {len(results)} record(s) to {written}")
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    wanted = _parse_checks(args.theorems)
    jobs: list[tuple[str, tuple[tuple[int, ...], ...]]] = []
    if args.n is not None:
        rc = enumerate_rc_exhaustive(args.n, allow_large=args.allow_large)
        jobs.append((f"n={args.n} mode=exhaustive", rc.members))
    elif args.in_ is not None:
        for rec in read_records(args.in_):
            members = tuple(parse_permutation(s) for s in rec.members)
            jobs.append((f"n={rec.n} mode={rec.mode}", members))
    else:
        raise InputError("give n or --in FILE")
    if not jobs:
        raise InputError("nothing to verify")

    reports = []
    ok = True
    for label, members in jobs:
        report = verify_structure(members, convention=args.convention)
        verdicts = {cid: report.verdicts[cid] for cid in wanted}
        counterexamples = [(cid, p) for cid, p in report.counterexamples if cid in wanted]
        ok = ok and all(verdicts.values())
        reports.append((label, report.n, verdicts, counterexamples))

    if args.json:
        _emit(
            {
                "checks": list(wanted),
                "reports": [
                    {
                        "label": label,
                        "n": n,
                        "verdicts": {c: "pass" if v else "fail" for c, v in verdicts.items()},
                        "counterexamples": [
                            {"check": c, "permutation": format_permutation(p)}
                            for c, p in counterexamples
                        ],
                    }
                    for label, n, verdicts, counterexamples in reports
                ],
                "ok": ok,
            }
        )
        return 0 if ok else 1
    for label, _n, verdicts, counterexamples in reports:
        print(label)
        for cid, verdict in verdicts.items():
            print(f"  {cid}: {'pass' if verdict else 'FAIL'}")
        for cid, p in counterexamples:
            print(f"  counterexample {cid}: {format_permutation(p)}")
    print(f"result: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_oracle_diff(args: argparse.Namespace) -> int:
    report = oracle_diff(
        args.n_max,
        samples=args.samples,
        seed=args.seed,
        spot=args.spot,
        allow_large=args.allow_large,
    )
    if args.json:
        _emit(report.to_json_dict())
        return 0 if report.ok else 1
    for n, cases in sorted(report.cases_by_n.items()):
        print(f"n={n}: {cases} cases")
    print(f"total {report.cases} cases, {report.spot_checks} scalar spot checks")
    if report.ok:
        print("routes agree everywhere")
        return 0
    for p, tb, tf in report.mismatches:
        print(f"MISMATCH {format_permutation(p)}: t_bruteforce={tb} t_fast={tf}")
    return 1


def cmd_sequence(args: argparse.Namespace) -> int:
    store = Path(args.in_) if args.in_ is not None else default_catalog_path()
    sys.stdout.write(export_sequence(read_records(store)))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    rows = []
    for n in range(3, args.n_max + 1):
        if fits_int64(n):
            arr = sample_permutations(n, args.samples, DEFAULT_SEED)
            start = time.perf_counter()
            t_fast_batch(arr)
            rows.append((n, "t_fast-batch", time.perf_counter() - start, args.samples))
        if n <= EXHAUSTIVE_LIMIT:
            start = time.perf_counter()
            rc = enumerate_rc_exhaustive(n)
            rows.append((n, "exhaustive", time.perf_counter() - start, rc.explored))
        if 4 <= n <= PRUNED_LIMIT:
            start = time.perf_counter()
            rc = enumerate_rc_pruned(n)
            rows.append((n, "pruned", time.perf_counter() - start, rc.explored))
    if args.json:
        _emit(
            {
                "rows": [
                    {"n": n, "mode": mode, "seconds": secs, "explored": count}
                    for n, mode, secs, count in rows
                ]
            }
        )
        return 0
    print(f"{'n':>3} {'mode':<14} {'seconds':>10} {'explored':>10}")
    for n, mode, secs, count in rows:
        print(f"{n:>3} {mode:<14} {secs:>10.4f} {count:>10}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rollercoaster",
        description="Permutation statistics, maximizer enumeration, structural verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stat = sub.add_parser("stat", help="run statistics and t for one permutation")
    p_stat.add_argument("perm", help='permutation, e.g. "2,4,1,5,3" (or "24153" while n <= 9)')
    p_stat.add_argument("--method", choices=("fast", "brute", "both"), default="fast")
    p_stat.add_argument("--json", action="store_true")
    p_stat.add_argument("--allow-large", action="store_true", help="override cost guards")
    p_stat.set_defaults(func=cmd_stat)

    p_enum = sub.add_parser("enumerate", help="compute the maximizer set RC(n)")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--mode", choices=("exhaustive", "pruned", "both"), default="exhaustive")
    p_enum.add_argument("--shards", type=int, default=1, help="minimum parallel cells to plan")
    p_enum.add_argument(
        "--out",
        nargs="?",
        const="",
        default=None,
        metavar="FILE",
        help="append the result to a catalog (bare --out uses $RC_CATALOG or rc_catalog.jsonl)",
    )
    p_enum.add_argument("--force", action="store_true", help="supersede an existing record")
    p_enum.add_argument(
        "--no-recursive-filter",
        action="store_true",
        help="drop the recursive-alternation candidate filter in pruned mode",
    )
    p_enum.add_argument(
        "--paranoid",
        action="store_true",
        help="re-check every member against the definitional oracle",
    )
    p_enum.add_argument("--json", action="store_true")
    p_enum.add_argument("--allow-large", action="store_true", help="override cost guards")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run the structural checks on a maximizer set")
    p_verify.add_argument("n", type=int, nargs="?", default=None)
    p_verify.add_argument("--in", dest="in_", metavar="FILE", help="verify catalog records instead")
    p_verify.add_argument(
        "--theorems",
        default="all",
        help="comma-separated subset of all|t1|t2|t3|c1|t5",
    )
    p_verify.add_argument("--convention", choices=CONVENTIONS, default="inherited")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--allow-large", action="store_true", help="override cost guards")
    p_verify.set_defaults(func=cmd_verify)

    p_diff = sub.add_parser("oracle-diff", help="cross-check the two t routes")
    p_diff.add_argument("--n-max", type=int, default=7)
    p_diff.add_argument("--samples", type=int, default=10_000, help="per sampled size (n > 7)")
    p_diff.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_diff.add_argument("--spot", type=int, default=8, help="scalar re-checks per batch")
    p_diff.add_argument("--json", action="store_true")
    p_diff.add_argument("--allow-large", action="store_true", help="override cost guards")
    p_diff.set_defaults(func=cmd_oracle_diff)

    p_seq = sub.add_parser("sequence", help="export the catalog as CSV (n,max_t,count)")
    p_seq.add_argument("--in", dest="in_", metavar="FILE", help="catalog path")
    p_seq.set_defaults(func=cmd_sequence)

    p_bench = sub.add_parser("bench", help="wall-times per size and mode")
    p_bench.add_argument("--n-max", type=int, default=8)
    p_bench.add_argument("--samples", type=int, default=2048, help="batch size for throughput rows")
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CostBoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except CatalogError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
