from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from .catalog.corpus import builtin_corpus
from .catalog.dissections import builtin_dissections
from .catalog.expr import Identity, eval_expr
from .catalog.grammar import parse_expr
from .catalog.store import RunDocument, dump_corpus, load_corpus
from .catalog.verify import level_report, run_dissection_case, verify, verify_all
from .config import EngineConfig, RunConfig
from .errors import ConfigError, ExpressionParseError, QSeriesError
from .formatters import (
    format_modularity_trace,
    format_report_line,
    format_series,
    format_summary,
    format_verify_errors,
)
from .modularity import find_scaling, format_geta, parse_geta, robins_check
from .search import describe_fit, fit_product
from .series import ps_dissect

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_arguments(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """
    Parse command-line arguments for the q-series engine.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=str, default=None, help="Truncation order (default: 100 or NAHM_QSERIES_ORDER)")
    common.add_argument("--corpus", type=Path, default=None, help="JSON Lines corpus instead of the built-in one")
    common.add_argument("--format", choices=["text", "json"], default="text", help="Output format (default: text)")
    common.add_argument("--verbose", action="store_true", help="Log engine diagnostics to stderr")

    parser = argparse.ArgumentParser(
        prog="nahm-qseries",
        description="Exact q-series engine - verify Nahm sum identities and certify modularity",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  nahm-qseries verify --id exam7-1 --order 200
  nahm-qseries verify-all --status conjectural-in-paper --order 300 --workers 8
  nahm-qseries eval --expr "nahm(A=[[2]],B=[0],C=0)" --order 5
  nahm-qseries dissect --case exam9-1-F --order 200
  nahm-qseries modcheck --geta "[[1176,84,-2],[1176,168,-1],[1176,252,-2],[1176,420,-3],[1176,504,-1],[1176,588,-1]]" --level 7056 --trace
  nahm-qseries scale --id exam7-1
  nahm-qseries fit --expr "subst(nahm(A=[[1/3,-1/3],[-1/3,4/3]],B=[-1/6,2/3],C=0),k=3)" --dissect 3 --component 0 --modulus 30 --order 360
  nahm-qseries export-corpus --out corpus.jsonl
        """,
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Verify one corpus identity")
    verify_parser.add_argument("--id", dest="identity_id", required=True, help="Identity id, e.g. exam7-1")

    verify_all_parser = subparsers.add_parser("verify-all", parents=[common], help="Verify the whole corpus")
    verify_all_parser.add_argument("--id-glob", default=None, help="Only ids matching this glob, e.g. 'exam2-*'")
    verify_all_parser.add_argument(
        "--status",
        choices=["proved-in-paper", "conjectural-in-paper", "auxiliary"],
        default=None,
        help="Only identities with this status",
    )
    verify_all_parser.add_argument("--workers", type=int, default=None, help="Worker processes (default: cpu count)")
    verify_all_parser.add_argument("--timings", action="store_true", help="Include per-identity timings")

    eval_parser = subparsers.add_parser("eval", parents=[common], help="Expand an expression")
    eval_parser.add_argument("--expr", required=True, help="Expression in the corpus grammar")

    dissect_parser = subparsers.add_parser("dissect", parents=[common], help="m-dissect a series")
    dissect_source = dissect_parser.add_mutually_exclusive_group(required=True)
    dissect_source.add_argument("--case", default=None, help="Built-in dissection case, e.g. exam9-1-F")
    dissect_source.add_argument("--expr", default=None, help="Expression to dissect")
    dissect_parser.add_argument("--m", type=int, default=None, help="Dissection modulus for --expr")

    modcheck_parser = subparsers.add_parser("modcheck", parents=[common], help="Robins' criterion on a geta-list")
    modcheck_parser.add_argument("--geta", required=True, help="Geta-list [[delta,g,r],...]")
    modcheck_parser.add_argument("--level", type=int, default=None, help="Level N (default: lcm of the deltas)")
    modcheck_parser.add_argument("--trace", action="store_true", help="Print the step-by-step trace")

    scale_parser = subparsers.add_parser("scale", parents=[common], help="Least scaling making the criterion hold")
    scale_source = scale_parser.add_mutually_exclusive_group(required=True)
    scale_source.add_argument("--geta", default=None, help="Geta-list [[delta,g,r],...]")
    scale_source.add_argument("--id", dest="identity_id", default=None, help="Corpus identity carrying C")
    scale_parser.add_argument("--level", type=int, default=None, help="Level N for --geta")

    fit_parser = subparsers.add_parser("fit", parents=[common], help="Recognize a product representation")
    fit_parser.add_argument("--expr", required=True, help="Expression to fit")
    fit_parser.add_argument("--modulus", type=int, required=True, help="Period M of the exponent pattern")
    fit_parser.add_argument("--dissect", type=int, default=None, help="Dissect first with this modulus")
    fit_parser.add_argument("--component", type=int, default=0, help="Component index after --dissect")

    export_parser = subparsers.add_parser("export-corpus", parents=[common], help="Write the corpus as JSON Lines")
    export_parser.add_argument("--out", type=Path, required=True, help="Output path")

    return parser.parse_args(argv)


def build_run_config(args: argparse.Namespace, engine: EngineConfig) -> RunConfig:
    workers = getattr(args, "workers", None)
    return RunConfig(
        subcommand=args.subcommand,
        order=args.order if args.order is not None else engine.default_order,
        corpus_path=args.corpus or engine.corpus_path,
        format=args.format,
        parallelism=engine.max_workers if workers is None else workers,
        id_filter=getattr(args, "id_glob", None),
        status_filter=getattr(args, "status", None),
    )


def _corpus(config: RunConfig) -> list[Identity]:
    if config.corpus_path is not None:
        return load_corpus(config.corpus_path)
    return list(builtin_corpus())


def _find(identities: Sequence[Identity], identity_id: str) -> Identity:
    for identity in identities:
        if identity.id == identity_id:
            return identity
    raise QSeriesError(f"unknown identity id {identity_id!r}")


def _print_reports(reports, config: RunConfig, show_timing: bool = False) -> int:
    if config.format == "json":
        print(RunDocument.from_reports(reports, config.order, show_timing).to_json())
    else:
        for report in reports:
            print(format_report_line(report, show_timing))
        if len(reports) > 1:
            print(format_summary(reports))
        errors = format_verify_errors(reports)
        if errors:
            print(errors)
    return EXIT_OK if all(report.ok for report in reports) else EXIT_FAILED


def _run_verify(args: argparse.Namespace, config: RunConfig) -> int:
    identity = _find(_corpus(config), args.identity_id)
    return _print_reports([verify(identity, config.order)], config)


def _run_verify_all(args: argparse.Namespace, config: RunConfig) -> int:
    reports = verify_all(
        config.order,
        config.parallelism,
        _corpus(config),
        config.id_filter,
        config.status_filter,
    )
    return _print_reports(reports, config, args.timings)


def _run_eval(args: argparse.Namespace, config: RunConfig) -> int:
    print(format_series(eval_expr(parse_expr(args.expr), config.order)))
    return EXIT_OK


def _run_dissect(args: argparse.Namespace, config: RunConfig) -> int:
    if args.case is not None:
        cases = {case.id: case for case in builtin_dissections()}
        if args.case not in cases:
            raise QSeriesError(f"unknown dissection case {args.case!r}")
        return _print_reports(run_dissection_case(cases[args.case], config.order), config)
    if args.m is None:
        raise QSeriesError("--m is required with --expr")
    components = ps_dissect(eval_expr(parse_expr(args.expr), config.order), args.m)
    for j, component in enumerate(components):
        print(f"F{j} = {format_series(component)} + O(q^{component.order})")
    return EXIT_OK


def _run_modcheck(args: argparse.Namespace, config: RunConfig) -> int:
    geta = parse_geta(args.geta, args.level)
    report = robins_check(geta)
    if args.trace:
        print(format_modularity_trace(geta, report))
    print(f"valinf={report.valinf} val0={report.val0} modular={'true' if report.is_modular else 'false'}")
    return EXIT_OK if report.is_modular else EXIT_FAILED


def _run_scale(args: argparse.Namespace, config: RunConfig) -> int:
    if args.identity_id is not None:
        identity = _find(_corpus(config), args.identity_id)
        level = level_report(identity)
        for geta in level.lists:
            print(format_geta(geta))
        print(f"C={level.C} k={level.k} level={level.level}")
        return EXIT_OK
    geta = parse_geta(args.geta, args.level)
    scaling = find_scaling(geta)
    print(f"k={scaling.k} n0={scaling.n0} level={scaling.level}")
    return EXIT_OK


def _run_fit(args: argparse.Namespace, config: RunConfig) -> int:
    series = eval_expr(parse_expr(args.expr), config.order)
    if args.dissect is not None:
        components = ps_dissect(series, args.dissect)
        if not 0 <= args.component < len(components):
            raise QSeriesError(f"component must lie in [0, {args.dissect - 1}], got {args.component}")
        series = components[args.component]
    engine = EngineConfig.from_env()
    fit = fit_product(series, args.modulus, guard=engine.fit_guard, periods=engine.fit_periods)
    print(describe_fit(fit))
    return EXIT_OK if fit is not None else EXIT_FAILED


def _run_export(args: argparse.Namespace, config: RunConfig) -> int:
    identities = _corpus(config)
    dump_corpus(identities, args.out)
    print(f"wrote {len(identities)} identities to {args.out}")
    return EXIT_OK


HANDLERS = {
    "verify": _run_verify,
    "verify-all": _run_verify_all,
    "eval": _run_eval,
    "dissect": _run_dissect,
    "modcheck": _run_modcheck,
    "scale": _run_scale,
    "fit": _run_fit,
    "export-corpus": _run_export,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = parse_arguments(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    try:
        config = build_run_config(args, EngineConfig.from_env())
        return HANDLERS[args.subcommand](args, config)
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExpressionParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
