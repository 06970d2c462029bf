"""Command-line front end.

Machine-readable results go to stdout, diagnostics to stderr.  Exit
codes: 0 no violations, 1 violations found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graph import Cycle, Graph6Error, parse_graph6, write_graph6
from .harness import report_to_json_str, sweep
from .invariants import circumference, invariant_report

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2


def _load_graph(arg: str):
    """Accept a graph6 literal or a path to a file holding one record."""
    text = arg
    if os.path.exists(arg):
        with open(arg) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        if len(lines) != 1:
            raise Graph6Error("input file must hold exactly one graph6 record")
        text = lines[0]
    return parse_graph6(text)


def _cmd_invariants(args) -> int:
    g = _load_graph(args.graph)
    print(invariant_report(g).to_json_str())
    return EXIT_OK


def _cmd_analyze(args) -> int:
    from .invariants import all_longest_paths_outside, enumerate_longest_cycles
    from .structure import (
        DecompositionError, check_claims_1_2, check_claims_3_4,
        check_lemma1, check_lemma2, check_lemma3, decompose,
    )

    g = _load_graph(args.graph)
    g6 = write_graph6(g)
    report = invariant_report(g)
    print(json.dumps({"invariants": report.to_json()}, sort_keys=True))
    bad = 0
    v3 = check_lemma3(g)
    print(v3.to_json_line(g6))
    bad += 0 if v3.holds else 1
    cycles, _ = enumerate_longest_cycles(g, cap=args.cap)
    for c in cycles:
        if c.vertex_set() == set(range(g.n)):
            continue
        paths, _ = all_longest_paths_outside(g, c, cap=args.cap)
        for p in paths:
            verdicts = [check_lemma1(g, c, p)]
            verdicts.extend(check_lemma2(g, c, p))
            try:
                d = decompose(g, c, p)
            except DecompositionError:
                d = None
            if d is not None:
                verdicts.extend(check_claims_1_2(g, d))
                verdicts.extend(check_claims_3_4(report, d))
            for v in verdicts:
                print(v.to_json_line(g6))
                bad += 0 if v.holds else 1
    return EXIT_VIOLATIONS if bad else EXIT_OK


def _cmd_verify(args) -> int:
    from .harness import _VERIFIERS

    g = _load_graph(args.graph)
    verdicts = [_VERIFIERS[args.theorem](g)] if args.theorem else [
        fn(g) for fn in _VERIFIERS.values()]
    for v in verdicts:
        print(json.dumps(v.to_json(), sort_keys=True))
    return (EXIT_VIOLATIONS
            if any(v.status == "VIOLATION" for v in verdicts) else EXIT_OK)


def _cmd_sweep(args) -> int:
    if args.max_n is None and not args.from_file:
        raise Graph6Error("sweep needs --max-n or --from-file")
    if (args.max_n is not None and args.max_n >= 10 and args.regular is None
            and not args.from_file and not args.i_know_this_is_slow):
        print("unrestricted n >= 10 sweeps are hours-scale; pass "
              "--i-know-this-is-slow or a degree filter", file=sys.stderr)
        return EXIT_USAGE
    records = None
    if args.from_file:
        records = open(args.from_file)
    try:
        report = sweep(
            min_n=args.min_n, max_n=args.max_n, records=records,
            theorems=tuple(args.theorems), lemmas=args.lemmas,
            workers=args.workers, regular=args.regular)
    finally:
        if records is not None:
            records.close()
    out = report_to_json_str(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
        print(report.to_csv(), end="")
    else:
        print(out)
    print(f"processed {report.processed}, "
          f"violations {len(report.violations)}, "
          f"rejected {len(report.rejected)}, "
          f"elapsed {report.elapsed:.1f}s", file=sys.stderr)
    bad = report.violations or report.lemma_violations
    return EXIT_VIOLATIONS if bad else EXIT_OK


def _cmd_extend(args) -> int:
    from .extension import greedy_extend

    g = _load_graph(args.graph)
    if args.start:
        start = Cycle(g, [int(v) for v in args.start.split(",")])
    else:
        _, start = circumference(g)
        if len(start) < 3:
            raise Graph6Error("graph has no cycle to extend")
    result = greedy_extend(g, start, budget=args.budget)
    print(json.dumps({
        "start_length": len(start),
        "final_length": len(result),
        "cycle": list(result.vertices),
    }, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tough-cycles",
        description="Exact invariants and long-cycle theorem verification "
                    "for small graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print the invariant vector")
    p.add_argument("graph", help="graph6 literal or file")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("analyze", help="decomposition and lemma verdicts")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("verify", help="run theorem verdicts on one graph")
    p.add_argument("graph")
    p.add_argument("--theorem", choices=("A", "B", "T1"))
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("sweep", help="verify theorems over a corpus")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--from-file", default=None,
                   help="graph6 records, one per line")
    p.add_argument("--theorems", nargs="+", default=["T1"],
                   choices=("A", "B", "T1"))
    p.add_argument("--lemmas", action="store_true",
                   help="also run the lemma suite per graph")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--regular", type=int, default=None,
                   help="restrict to r-regular graphs")
    p.add_argument("--out", default=None, help="write JSON report here")
    p.add_argument("--i-know-this-is-slow", action="store_true")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("extend", help="greedy cycle extension")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--start", default=None,
                   help="comma-separated starting cycle (default: a longest cycle)")
    p.set_defaults(fn=_cmd_extend)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else EXIT_OK
    try:
        return args.fn(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
