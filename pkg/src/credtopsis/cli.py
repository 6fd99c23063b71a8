"""Command-line driver.

Subcommands: ``demo`` (bundled case study end to end), ``evaluate`` (rank a
problem file), ``sensitivity`` (re-rank under a scenario file of weight
vectors) and ``scale`` (show the default linguistic scale). Results go to
stdout, diagnostics to stderr. Exit codes: 0 success, 2 validation or parse
error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys

from .casestudy import scenarios_path, problem_path, waste_disposal_problem
from .engine import RankingResult, evaluate
from .errors import DecisionError
from .model import DEFAULT_SCALE
from .problem_io import load_problem, load_scenarios, run_sensitivity
from .report import ReportBundle, emit_report, round_half_away

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3


def _print_result(result: RankingResult, decimals: int = 3):
    print("Ranking (best first): " + " > ".join(result.ranking()))
    print(f"{'alternative':<12}{'cc_mean':>10}{'cc_std':>10}{'cc_final':>10}{'rank':>6}")
    for i, alt in enumerate(result.alternatives):
        print(
            f"{alt:<12}"
            f"{round_half_away(result.cc_mean[i], decimals):>10}"
            f"{round_half_away(result.cc_std[i], decimals):>10}"
            f"{round_half_away(result.cc_final[i], decimals):>10}"
            f"{result.ranks[i]:>6}"
        )
    if result.weight_warning:
        print("warning: " + result.weight_warning, file=sys.stderr)


def _print_scenario_table(alternatives, scenario_results):
    name_width = max([len("scenario")] + [len(name) for name, _ in scenario_results])
    print(f"{'scenario':<{name_width}}" + "".join(f"{alt:>6}" for alt in alternatives))
    for name, result in scenario_results:
        print(f"{name:<{name_width}}" + "".join(f"{r:>6}" for r in result.ranks))


def _cmd_demo(args) -> int:
    problem, scale = waste_disposal_problem()
    result = evaluate(problem, scale=scale)
    print(f"Bundled case study: {problem_path().name} "
          f"({len(problem.alternatives)} alternatives, {len(problem.criteria)} criteria, "
          f"{len(problem.experts)} experts)")
    _print_result(result)
    if args.out:
        scenario_results = run_sensitivity(problem, load_scenarios(scenarios_path()), scale)
        paths = emit_report(
            ReportBundle(result, scenario_results), args.out, emit_chart=args.chart
        )
        print(f"wrote {len(paths)} files to {args.out}")
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    problem, scale = load_problem(args.problem)
    result = evaluate(problem, scale=scale)
    _print_result(result, args.decimals)
    if args.out:
        paths = emit_report(
            ReportBundle(result),
            args.out,
            decimals=args.decimals,
            emit_chart=args.chart,
            include_intermediates=args.emit_intermediates,
        )
        print(f"wrote {len(paths)} files to {args.out}")
    return EXIT_OK


def _cmd_sensitivity(args) -> int:
    problem, scale = load_problem(args.problem)
    scenarios = load_scenarios(args.scenarios)
    scenario_results = run_sensitivity(problem, scenarios, scale)
    _print_scenario_table(problem.alternatives, scenario_results)
    if args.out:
        base = evaluate(problem, scale=scale)
        paths = emit_report(
            ReportBundle(base, scenario_results),
            args.out,
            decimals=args.decimals,
            emit_chart=args.chart,
        )
        print(f"wrote {len(paths)} files to {args.out}")
    return EXIT_OK


def _cmd_scale(args, parser) -> int:
    if not args.show:
        parser.error("nothing to do, pass --show")
    print(f"{'term':<6}{'score':>16}")
    for term, tfn in DEFAULT_SCALE.terms.items():
        triple = ", ".join(f"{v:g}" for v in tfn.as_tuple())
        print(f"{term:<6}{'(' + triple + ')':>16}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="credtopsis",
        description="Rank alternatives with credibilistic TOPSIS over fuzzy group ratings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    demo = sub.add_parser("demo", help="run the bundled waste-disposal case study")
    demo.add_argument("--out", help="also write the full report (with scenarios) here")
    demo.add_argument("--chart", action="store_true", help="include the SVG chart")

    ev = sub.add_parser("evaluate", help="rank the alternatives of a problem file")
    ev.add_argument("--problem", required=True, help="problem JSON file")
    ev.add_argument("--out", help="write reports to this directory")
    ev.add_argument(
        "--emit-intermediates",
        action="store_true",
        help="also write aggregated/normalized/mean/std matrices and ideals",
    )
    ev.add_argument("--decimals", type=int, default=3, help="report rounding (default 3)")
    ev.add_argument("--chart", action="store_true", help="include the SVG chart")

    sens = sub.add_parser("sensitivity", help="re-rank under alternative weight vectors")
    sens.add_argument("--problem", required=True, help="problem JSON file")
    sens.add_argument("--scenarios", required=True, help="scenario JSON file")
    sens.add_argument("--out", help="write reports to this directory")
    sens.add_argument("--decimals", type=int, default=3, help="report rounding (default 3)")
    sens.add_argument("--chart", action="store_true", help="include the SVG chart")

    scale = sub.add_parser("scale", help="show the default linguistic scale")
    scale.add_argument("--show", action="store_true", help="print the seven-term scale")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "demo":
            return _cmd_demo(args)
        if args.command == "evaluate":
            return _cmd_evaluate(args)
        if args.command == "sensitivity":
            return _cmd_sensitivity(args)
        return _cmd_scale(args, parser)
    except DecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
