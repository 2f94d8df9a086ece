from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from . import __version__
from .closed_forms import closed_form_eval, closed_form_for
from .coefficients import Family, Route, coefficient_table
from .config import LOG_LEVELS, REPORT_FORMATS, SUITE_NAMES, RunConfig, load_config, report_dir
from .errors import AdmissibilityError, AkzetaError
from .harness import emit_report, parse_report, run_suite
from .integrals import DEFAULT_QUAD_TOL, SpecialFunctionRequest, quad_eval
from .kernel.multizeta import DEFAULT_TOL, HurwitzStarArgs, ZetaMethod, mhzsv_num, mhzv_num
from .polybernoulli import SignedIndex, kt_frakB_r2, poly_bernoulli_B, poly_bernoulli_C
from .theorems import theorem_eval
from .tui import ReportBrowserApp
from .ui.status import summarize
from .utils.formatting import format_value

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _ints(text: str) -> tuple[int, ...]:
    return SignedIndex.parse(text).entries


def _fractions(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(",") if p.strip())
    except ValueError as e:
        raise ValueError(f"cannot parse shifts {text!r}: expected comma-separated rationals") from e


def cmd_coeffs(args: argparse.Namespace) -> int:
    table = coefficient_table(Family(args.family), args.n, args.k, Route(args.route))
    head = f"{table.family.value}^({table.n})" + (f" k={table.k}" if table.k is not None else "")
    print(head)
    for row, values in table.rows():
        print(f"{row}: " + " ".join(str(v) for v in values))
    return EXIT_OK


def cmd_polybernoulli(args: argparse.Namespace) -> int:
    index = SignedIndex.parse(args.index)
    if args.kind == "B":
        value = poly_bernoulli_B(index, args.m)
    elif args.kind == "C":
        value = poly_bernoulli_C(index, args.m)
    else:
        if index.depth != 2 or min(index.entries) < 0:
            raise AdmissibilityError("frakB2 takes a depth-2 index k1,k2 of nonnegative integers", f"got {index}")
        value = kt_frakB_r2(*index.entries, args.m)
    print(value)
    return EXIT_OK


def cmd_zetastar(args: argparse.Namespace) -> int:
    exps = _ints(args.exps)
    shifts = _fractions(args.shifts) if args.shifts else (Fraction(1),) * len(exps)
    zeta_args = HurwitzStarArgs(exps, shifts)
    evaluate = mhzv_num if args.strict else mhzsv_num
    value = evaluate(zeta_args, tol=args.tol, method=args.method)
    print(format_value(value, digits=15))
    return EXIT_OK


def cmd_special(args: argparse.Namespace) -> int:
    request = SpecialFunctionRequest.from_index(args.fn, args.index, args.s)
    if args.method == "quadrature":
        value = quad_eval(request, tol=args.tol)
    elif args.method == "theorem":
        value = theorem_eval(request)
    else:
        form = closed_form_for(request.function, request.index.entries)
        if form is None:
            raise AdmissibilityError(f"no closed form is registered for {args.fn}{request.index}")
        value = closed_form_eval(form.name, args.s)
    print(f"{request.label} = {format_value(value, digits=15)}")
    return EXIT_OK


def _effective_config(args: argparse.Namespace) -> RunConfig:
    base = load_config(Path(args.config)) if args.config else load_config()
    return base.merged(
        suite=args.suite,
        report_path=args.report,
        report_format=args.format,
        jobs=args.jobs,
        tolerance=args.tolerance,
        log_level=args.log_level,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    if args.log_level is None:
        logging.getLogger().setLevel(cfg.log_level)
    records = run_suite(cfg.suite, cfg)
    path = Path(cfg.report_path) if cfg.report_path else report_dir() / f"akzeta-{cfg.suite}.{cfg.report_format}"
    emit_report(records, cfg.report_format, path, config=cfg)
    for r in records:
        if not r.passed:
            print(f"FAIL {r.case_id}: {r.description}")
    print(summarize(records))
    print(f"report: {path}")
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAILURE


def cmd_browse(args: argparse.Namespace) -> int:
    path = Path(args.report)
    app = ReportBrowserApp(parse_report(path), source=path)
    app.failed_only = args.failed_only
    app.run()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser for the `akzeta` console script."""
    parser = argparse.ArgumentParser(
        prog="akzeta",
        description="Exact and numeric verification of Arakawa-Kaneko type zeta values with mixed-sign indices.",
    )
    parser.add_argument("--version", action="version", version=f"akzeta {__version__}")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print an exact coefficient table")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--route", choices=[r.value for r in Route], default=Route.REBASE.value)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("polybernoulli", help="print a poly-Bernoulli number")
    p.add_argument("--kind", required=True, choices=["B", "C", "frakB2"])
    p.add_argument("--index", required=True, help='signed index, e.g. "1,-2"')
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_polybernoulli)

    p = sub.add_parser("zetastar", help="evaluate a multiple (Hurwitz) zeta-star value")
    p.add_argument("--exps", required=True, help='exponents, e.g. "1,2"')
    p.add_argument("--shifts", default=None, help='Hurwitz shifts, e.g. "2,2" or "1/2,1/2"')
    p.add_argument("--strict", action="store_true", help="strict ordering instead of the star value")
    p.add_argument("--method", choices=[m.value for m in ZetaMethod], default=ZetaMethod.HOLDER.value)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_zetastar)

    p = sub.add_parser("special", help="evaluate η, ξ or ξ̃ at real s")
    p.add_argument("--fn", required=True, choices=["eta", "xi", "xitilde"])
    p.add_argument("--index", required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--method", choices=["quadrature", "theorem", "closedform"], default="quadrature")
    p.add_argument("--tol", type=float, default=DEFAULT_QUAD_TOL)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("verify", help="run a verification suite and write a report")
    p.add_argument("--suite", choices=SUITE_NAMES, default=None)
    p.add_argument("--report", default=None, help="report path (default: report directory)")
    p.add_argument("--format", choices=REPORT_FORMATS, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--config", default=None, help="run configuration file")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("browse", help="browse a report in the terminal UI")
    p.add_argument("report")
    p.add_argument("--failed-only", action="store_true")
    p.set_defaults(func=cmd_browse)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for the `akzeta` console script.

    Returns:
        0 when every check passed, 1 on a failing check or I/O error, 2 on
        usage, admissibility, configuration, index-range or domain errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=args.log_level or "WARNING", format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (AkzetaError, ValueError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
