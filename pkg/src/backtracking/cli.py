"""Command-line front end: law suites, backtracking demos, cost benchmark.

JSON output is newline-delimited, one object per record, with stable key
order.  The laws command exits 0 only when every report came back passed,
which for the negative suite means its witness pair showed up.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import effects as fx
from . import laws, workloads


def emit_json(records, stream=None):
    stream = stream if stream is not None else sys.stdout
    for rec in records:
        stream.write(json.dumps(rec) + "\n")


def law_record(report: laws.LawReport) -> dict:
    return {
        "suite": report.suite,
        "cases": report.cases,
        "failures": [list(f) for f in report.failures],
        "passed": report.passed,
    }


def _run_laws(args) -> int:
    suites = laws.SUITE_ORDER if args.suite == "all" else (args.suite,)
    for s in suites:
        if s not in laws.CATALOG:
            print("unknown suite: %s (known: %s)" % (s, ", ".join(laws.SUITE_ORDER)),
                  file=sys.stderr)
            return 2
    if args.base != "all" and args.base not in fx.BASES:
        print("unknown base: %s (known: %s)" % (args.base, ", ".join(sorted(fx.BASES))),
              file=sys.stderr)
        return 2

    reports = []
    for suite in suites:
        applicable = laws.applicable_bases(suite)
        if args.base == "all":
            bases = applicable
        elif args.base in applicable:
            bases = (args.base,)
        elif args.suite == "all":
            continue  # skip inapplicable suites in a sweep
        else:
            print("suite %s is not applicable to base %s (applicable: %s)"
                  % (suite, args.base, ", ".join(applicable)), file=sys.stderr)
            return 2
        merged = None
        for base in bases:
            cfg = laws.GenConfig(seed=args.seed, cases=args.cases, base=fx.BASES[base])
            rep = laws.run_suite(suite, cfg)
            if merged is None:
                merged = rep
            else:
                merged.cases += rep.cases
                merged.failures.extend(rep.failures)
                merged.passed = merged.passed and rep.passed
        reports.append(merged)

    if args.json:
        emit_json(law_record(r) for r in reports)
    else:
        for r in reports:
            mark = "PASS" if r.passed else "FAIL"
            print("%s %-30s cases=%d failures=%d" % (mark, r.suite, r.cases, len(r.failures)))
            if not r.passed:
                for case, lhs, rhs in r.failures[:3]:
                    print("  case: %s" % case)
                    print("   lhs: %s" % lhs)
                    print("   rhs: %s" % rhs)
    return 0 if all(r.passed for r in reports) else 1


def _bench_record(repr_name, workload, n, results_count, base_bind_count, wall_ns) -> dict:
    return {
        "repr": repr_name,
        "workload": workload,
        "n": n,
        "results_count": results_count,
        "base_bind_count": base_bind_count,
        "wall_ns": wall_ns,
    }


def _demo_search(args, cls, sig, build):
    t0 = time.perf_counter_ns()
    search = build()
    count, values = search.observe_all().observe()
    wall = time.perf_counter_ns() - t0
    rec = _bench_record(args.repr_name, args.workload, args.n, len(values), count, wall)
    first_binds = None
    if args.repr_name in ("steplist", "twocont"):
        xs = search if args.repr_name == "steplist" else search.to_steplist()
        first = xs.take_first().observe()
        first_binds = first[0]
    return rec, values, first_binds


def _run_demo(args, parser) -> int:
    cls = workloads.REPRS[args.repr_name]
    if args.n < 1:
        parser.error("--n must be positive")
    records = []
    text = []

    if args.workload in ("queens", "pythag"):
        sig = fx.counter(fx.IDENTITY)
        build = (lambda: workloads.queens(args.n, cls, sig)) if args.workload == "queens" \
            else (lambda: workloads.pythag(args.n, cls, sig))
        rec, values, first_binds = _demo_search(args, cls, sig, build)
        records.append(rec)
        text.append("%s n=%d (%s): %d results, %d base binds"
                    % (args.workload, args.n, args.repr_name, rec["results_count"],
                       rec["base_bind_count"]))
        if first_binds is not None:
            text.append("  first result only: %d base binds" % first_binds)
        for v in values[:5]:
            text.append("  %r" % (v,))
        if len(values) > 5:
            text.append("  ... %d more" % (len(values) - 5))

    elif args.workload == "parser":
        if args.repr_name in workloads.EFFECTS_FIRST:
            parser.error("the parser workload needs a state base, which is not "
                         "commutative; use --repr steplist or twocont")
        tokens = workloads.parser_tokens(args.n)
        sig = workloads.parser_sig(tokens)
        t0 = time.perf_counter_ns()
        p = workloads.parses(tokens, cls, sig)
        xs = p if args.repr_name == "steplist" else p.to_steplist()
        first_val, first_binds, _s = workloads.run_state(xs.take_first())
        all_vals, all_binds, _s = workloads.run_state(p.observe_all())
        wall = time.perf_counter_ns() - t0
        records.append(_bench_record(args.repr_name, "parser:first", args.n, 1, first_binds, wall))
        records.append(_bench_record(args.repr_name, "parser:all", args.n, len(all_vals), all_binds, wall))
        text.append("parser n=%d (%s): tokens=%r" % (args.n, args.repr_name, tokens))
        text.append("  first parse: %r  (%d base binds)" % (first_val, first_binds))
        text.append("  all parses: %d  (%d base binds)" % (len(all_vals), all_binds))

    elif args.workload == "lazy":
        if args.repr_name != "steplist":
            parser.error("the lazy workload demonstrates the step list over the "
                         "thunk base; use --repr steplist")
        for k in (0, 1, 5):
            t0 = time.perf_counter_ns()
            values, forces = workloads.lazy_forces(args.n, k)
            wall = time.perf_counter_ns() - t0
            records.append(_bench_record(args.repr_name, "lazy:take%d" % k, args.n,
                                         len(values), forces, wall))
            text.append("lazy n=%d take %d -> %r, %d suspensions forced"
                        % (args.n, k, values, forces))

    if args.json:
        emit_json(records)
    else:
        print("\n".join(text))
    return 0


def _run_bench(args) -> int:
    repr_names = [r.strip() for r in args.reprs.split(",") if r.strip()]
    for r in repr_names:
        if r not in workloads.REPRS:
            print("unknown repr: %s" % r, file=sys.stderr)
            return 2
    ladder = [int(x) for x in args.n_ladder.split(",") if x.strip()]
    records = workloads.bench_ladder(repr_names, ladder)
    if args.json:
        emit_json(records)
    else:
        for rec in records:
            print("%-9s n=%-5d results=%-5d binds=%-8d wall=%.3fms"
                  % (rec["repr"], rec["n"], rec["results_count"],
                     rec["base_bind_count"], rec["wall_ns"] / 1e6))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="backtracking",
        description="Backtracking representations: law suites, demos, cost benchmark.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    lp = sub.add_parser("laws", help="run law suites")
    lp.add_argument("--suite", default="all",
                    help="suite id or 'all' (known: %s)" % ", ".join(laws.SUITE_ORDER))
    lp.add_argument("--base", default="all", help="base signature id or 'all'")
    lp.add_argument("--cases", type=int, default=1000)
    lp.add_argument("--seed", type=int, default=0)
    lp.add_argument("--json", action="store_true")

    dp = sub.add_parser("demo", help="run a backtracking demo")
    dp.add_argument("--repr", dest="repr_name", required=True,
                    choices=sorted(workloads.REPRS))
    dp.add_argument("--workload", required=True,
                    choices=("queens", "pythag", "parser", "lazy"))
    dp.add_argument("--n", type=int, required=True)
    dp.add_argument("--json", action="store_true")

    bp = sub.add_parser("bench", help="left-nested choice cost ladder")
    bp.add_argument("--reprs", default="steplist,twocont")
    bp.add_argument("--n-ladder", dest="n_ladder", default="125,250,500,1000")
    bp.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "laws":
        return _run_laws(args)
    if args.command == "demo":
        return _run_demo(args, parser)
    return _run_bench(args)


if __name__ == "__main__":
    sys.exit(main())
