"""
The riordan-tp command line.

This module:
1. Declares one argparse subcommand per library operation
2. Evaluates generating-function options with the expression grammar
3. Renders results as pretty text, JSON or CSV, to stdout or --out
4. Maps library errors to exit codes

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 evaluation error.
"""
import argparse
import json
import logging
import sys
from typing import Callable, List, Optional, Sequence

from src import config
from src.arrays.builders import build_almost, build_appell, build_quasi, build_riordan
from src.arrays.group import mult_almost, mult_quasi
from src.arrays.matrix_window import MatrixWindow
from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec, RiordanSpec
from src.cli.expression import series_from_text
from src.errors import GFSyntaxError, InvalidArgument, RiordanError
from src.sequences.characteristic import azw_as_series_text, azw_from_almost, azw_from_quasi
from src.sequences.production import (
    FAMILIES,
    TridiagonalProduction,
    extract_production,
    production_from_azw,
    production_window_from_tridiagonal,
)
from src.sequences.recovery import recover_from_tridiagonal
from src.series import Series, format_rational, parse_rational
from src.tp.jacobi import (
    det_J,
    det_T_closed,
    det_T_sequence,
    exact_tridiagonal_check,
    find_negative_T,
    jacobi_tp_check,
    one_root_check,
    thm34_check,
)
from src.tp.minors import TPReport, count_minors, tp_check
from src.tp.polya import pf_polynomial_check, pf_window_check
from src.verify.regions import region_check, region_from_theorem, region_grid
from src.verify.workflow import run_corpus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_EVALUATION = 3

PRODUCTION_FIELDS = ("a0", "a1", "a2", "z0", "z1", "z2", "w0", "w1")


class CommandResult:
    """Rendered output of a command plus its exit code."""

    def __init__(self, pretty: str, data=None, csv: Optional[str] = None, exit_code: int = EXIT_OK):
        self.pretty = pretty
        self.data = data
        self.csv = csv
        self.exit_code = exit_code

    def render(self, fmt: str) -> str:
        if fmt == "json":
            if hasattr(self.data, "model_dump_json"):
                return self.data.model_dump_json(indent=2)
            return json.dumps(self.data, indent=2)
        if fmt == "csv":
            if self.csv is None:
                raise InvalidArgument("this command has no CSV output; use --format pretty or json")
            return self.csv.rstrip("\n")
        return self.pretty


# Option helpers


def _series(args: argparse.Namespace, name: str, order: int) -> Series:
    text = getattr(args, name)
    if text is None:
        raise InvalidArgument(f"--{name.replace('_', '-')} is required")
    return series_from_text(text, order)


def _order(args: argparse.Namespace, rows: int = 0, extra: int = 2) -> int:
    return args.order if getattr(args, "order", None) is not None else rows + extra


def _production(args: argparse.Namespace) -> TridiagonalProduction:
    if args.family:
        if args.alpha is None or args.beta is None:
            raise InvalidArgument("--family needs --alpha and --beta")
        return TridiagonalProduction.family(args.family, args.alpha, args.beta)
    if args.params:
        values = [part.strip() for part in args.params.split(",")]
        if len(values) != len(PRODUCTION_FIELDS):
            raise InvalidArgument(f"--params needs {len(PRODUCTION_FIELDS)} values: {','.join(PRODUCTION_FIELDS)}")
        return TridiagonalProduction(**dict(zip(PRODUCTION_FIELDS, values)))
    raise InvalidArgument("give either --family with --alpha/--beta or --params a0,a1,a2,z0,z1,z2,w0,w1")


def _window_result(window: MatrixWindow, args: argparse.Namespace) -> CommandResult:
    return CommandResult(window.pretty(args.decimal), window.to_document(), window.to_csv())


def _series_data(series: Series) -> List[str]:
    return [format_rational(c) for c in series.coeffs]


def _spec_window(args: argparse.Namespace, rows: int, cols: int) -> MatrixWindow:
    """Window described by --d/--g/--f: (d | g, f), [g, f] with --quasi, (g, f) without --d."""
    order = _order(args, max(rows, cols))
    if getattr(args, "quasi", False):
        return build_quasi(QuasiRiordanSpec(_series(args, "g", order), _series(args, "f", order)), rows, cols)
    if getattr(args, "appell", False):
        return build_appell(_series(args, "g", order), rows, cols)
    if args.d is None:
        return build_riordan(RiordanSpec(_series(args, "g", order), _series(args, "f", order)), rows, cols)
    spec = AlmostRiordanSpec(_series(args, "d", order), _series(args, "g", order), _series(args, "f", order))
    return build_almost(spec, rows, cols)


def _report_text(report: TPReport) -> str:
    lines = [
        f"verdict: {report.verdict}",
        f"checked order: {report.checked_order}",
        f"minors checked: {report.minors_checked}",
        f"strategy: {report.strategy}",
    ]
    if report.witness is not None:
        w = report.witness
        lines.append(f"witness: rows {w.rows} cols {w.cols} value {format_rational(w.value)}")
    lines.append(f"certificate: {report.certificate}")
    return "\n".join(lines)


# Commands


def cmd_build(args: argparse.Namespace) -> CommandResult:
    cols = args.cols or args.rows
    return _window_result(_spec_window(args, args.rows, cols), args)


def cmd_build_quasi(args: argparse.Namespace) -> CommandResult:
    cols = args.cols or args.rows
    args.quasi = True
    return _window_result(_spec_window(args, args.rows, cols), args)


def cmd_mult(args: argparse.Namespace) -> CommandResult:
    order = _order(args, extra=6)
    if args.quasi:
        x = QuasiRiordanSpec(_series(args, "g1", order), _series(args, "f1", order))
        y = QuasiRiordanSpec(_series(args, "g2", order), _series(args, "f2", order))
        product = mult_quasi(x, y)
        data = {"g": _series_data(product.g), "f": _series_data(product.f)}
        return CommandResult(f"g(t) = {product.g}\nf(t) = {product.f}", data)
    x = AlmostRiordanSpec(_series(args, "d1", order), _series(args, "g1", order), _series(args, "f1", order))
    y = AlmostRiordanSpec(_series(args, "d2", order), _series(args, "g2", order), _series(args, "f2", order))
    product = mult_almost(x, y)
    data = {"d": _series_data(product.d), "g": _series_data(product.g), "f": _series_data(product.f)}
    return CommandResult(f"d(t) = {product.d}\ng(t) = {product.g}\nf(t) = {product.f}", data)


def cmd_azw(args: argparse.Namespace) -> CommandResult:
    # each A/Z/W coefficient costs one order of the input
    source_order = args.order + 1
    if args.quasi:
        azw = azw_from_quasi(QuasiRiordanSpec(_series(args, "g", source_order), _series(args, "f", source_order)),
                             args.order)
    else:
        spec = AlmostRiordanSpec(_series(args, "d", source_order), _series(args, "g", source_order),
                                 _series(args, "f", source_order))
        azw = azw_from_almost(spec, args.order)
    return CommandResult(azw_as_series_text(azw), azw.to_document())


def cmd_production(args: argparse.Namespace) -> CommandResult:
    cols = args.cols or args.rows
    if args.family or args.params:
        window = production_window_from_tridiagonal(_production(args), args.rows, cols)
    else:
        order = args.order or max(args.rows, cols) + 1
        spec = AlmostRiordanSpec(_series(args, "d", order), _series(args, "g", order), _series(args, "f", order))
        window = production_from_azw(azw_from_almost(spec, max(args.rows, cols)), args.rows, cols)
    return _window_result(window, args)


def cmd_extract_production(args: argparse.Namespace) -> CommandResult:
    return _window_result(extract_production(MatrixWindow.load(args.matrix)), args)


def cmd_recover(args: argparse.Namespace) -> CommandResult:
    order = max(args.order, args.rows + 1) if args.rows else args.order
    spec = recover_from_tridiagonal(_production(args), args.d0, order)
    if args.rows:
        return _window_result(build_almost(spec, args.rows, args.rows), args)
    data = {"d": _series_data(spec.d), "g": _series_data(spec.g), "f": _series_data(spec.f)}
    return CommandResult(f"d(t) = {spec.d}\ng(t) = {spec.g}\nf(t) = {spec.f}", data)


def cmd_tp_check(args: argparse.Namespace) -> CommandResult:
    if args.matrix:
        window = MatrixWindow.load(args.matrix)
    else:
        window = _spec_window(args, args.rows, args.rows)
    max_order = args.max_order or min(config.default_tp_order(), window.rows, window.cols)
    needed = count_minors(window.rows, window.cols, max_order, args.strategy)
    print(f"screening {window.rows}x{window.cols} window: {needed} minors up to order {max_order}", file=sys.stderr)
    report = tp_check(window, max_order=max_order, strategy=args.strategy, minor_budget=args.budget)
    return CommandResult(_report_text(report), report)


def cmd_jacobi_check(args: argparse.Namespace) -> CommandResult:
    if args.matrix:
        window = MatrixWindow.load(args.matrix)
    else:
        window = production_window_from_tridiagonal(_production(args), args.rows)
    report = jacobi_tp_check(window, args.max_order)
    return CommandResult(_report_text(report), report)


def cmd_det_t(args: argparse.Namespace) -> CommandResult:
    if args.find_negative:
        n = find_negative_T(args.a0, args.a1, args.a2, args.limit)
        return CommandResult(f"first negative det(T_n): n = {n}", {"n": n})
    values = det_T_sequence(args.a0, args.a1, args.a2, args.n)
    rows = []
    for k, value in enumerate(values):
        # the closed form starts at n = 1; T_0 = 1 is a convention
        closed = det_T_closed(args.a0, args.a1, args.a2, k) if k >= 1 else None
        rows.append({
            "n": k,
            "recurrence": format_rational(value),
            "closed": None if closed is None else format_rational(closed),
        })
    pretty = "\n".join(
        f"det(T_{row['n']}) = {row['recurrence']}" + ("" if row["closed"] is None else f"  (closed form {row['closed']})")
        for row in rows
    )
    csv_text = "n,recurrence,closed\n" + "\n".join(
        f"{row['n']},{row['recurrence']},{row['closed'] or ''}" for row in rows
    )
    return CommandResult(pretty, rows, csv_text)


def cmd_det_j(args: argparse.Namespace) -> CommandResult:
    value = det_J(_production(args), args.n)
    return CommandResult(f"det(J_{args.n}) = {format_rational(value)}", {"n": args.n, "det": format_rational(value)})


def cmd_thm34(args: argparse.Namespace) -> CommandResult:
    p = _production(args)
    data = {
        "discriminant": format_rational(p.discriminant),
        "thm34": thm34_check(p).value,
        "one_root": one_root_check(p).value,
        "exact": exact_tridiagonal_check(p).value,
    }
    pretty = "\n".join([
        f"discriminant a1^2 - 4 a0 a2 = {data['discriminant']}",
        f"two-root conditions: {data['thm34']}",
        f"one-root conditions: {data['one_root']}",
        f"exact criterion: {data['exact']}",
    ])
    return CommandResult(pretty, data)


def cmd_region(args: argparse.Namespace) -> CommandResult:
    if args.compare:
        comparison = region_from_theorem(args.family, args.alpha, args.beta)
        pretty = (f"{comparison.family} at ({format_rational(comparison.alpha)}, {format_rational(comparison.beta)}): "
                  f"printed region {'in' if comparison.printed else 'out'}, "
                  f"theorem {comparison.theorem.value}, exact {comparison.exact.value}")
        return CommandResult(pretty, comparison)
    inside = region_check(args.family, args.alpha, args.beta)
    data = {"family": args.family.upper(), "alpha": format_rational(args.alpha),
            "beta": format_rational(args.beta), "inside": inside}
    return CommandResult("in" if inside else "out", data)


def cmd_region_grid(args: argparse.Namespace) -> CommandResult:
    points = region_grid(args.family, args.alpha_min, args.alpha_max, args.beta_min, args.beta_max, args.step)
    lines = ["alpha,beta,inside"] + [
        f"{format_rational(p.alpha)},{format_rational(p.beta)},{'in' if p.inside else 'out'}" for p in points
    ]
    data = [point.model_dump(mode="json") for point in points]
    return CommandResult("\n".join(lines), data, "\n".join(lines))


def cmd_pf_check(args: argparse.Namespace) -> CommandResult:
    s = series_from_text(args.p, _order(args, args.window))
    if s.is_polynomial(2):
        result = pf_polynomial_check(s)
        return CommandResult(f"PF: {result} (exact, degree <= 2)", {"pf": result, "method": "polynomial"})
    report = pf_window_check(s, args.window, args.max_order)
    return CommandResult("Toeplitz window screen\n" + _report_text(report), report)


def cmd_verify_paper(args: argparse.Namespace) -> CommandResult:
    if not args.all and not args.ids:
        raise InvalidArgument("give --all or at least one --id")
    report = run_corpus(None if args.all else args.ids, args.corpus)
    pretty = "\n".join(["=" * 60, "WORKED-EXAMPLE CORPUS", "=" * 60, report.render_text(args.verbose)])
    code = EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
    return CommandResult(pretty, report, exit_code=code)


# Parser


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty",
                        help="Output format (default: pretty)")
    common.add_argument("--out", type=str, help="Write the output to this file")
    common.add_argument("--decimal", type=int, help="Add a display-only block rounded to N digits")
    common.add_argument("--debug", action="store_true", help="Print debug information")
    return common


def _add_gf_options(parser: argparse.ArgumentParser, with_d: bool = True) -> None:
    if with_d:
        parser.add_argument("--d", type=str, help="First column d(t)")
    parser.add_argument("--g", type=str, help="Generating function g(t)")
    parser.add_argument("--f", type=str, help="Generating function f(t)")
    parser.add_argument("--order", type=int, help="Expansion order of the generating functions")


def _add_production_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", type=str, choices=[*FAMILIES, *(f.lower() for f in FAMILIES)],
                        help="One of the two-parameter families")
    parser.add_argument("--alpha", type=parse_rational, help="Family parameter alpha")
    parser.add_argument("--beta", type=parse_rational, help="Family parameter beta")
    parser.add_argument("--params", type=str, help="Eight scalars a0,a1,a2,z0,z1,z2,w0,w1")


def make_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="riordan-tp",
        description="Exact Riordan-type arrays, production matrices and total positivity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="Window of (d | g, f), (g, f) or the Appell array (g, t)")
    _add_gf_options(p)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int)
    p.add_argument("--appell", action="store_true", help="Build the Appell array (g, t)")
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("build-quasi", parents=[common], help="Window of the quasi-Riordan array [g, f]")
    _add_gf_options(p, with_d=False)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int)
    p.set_defaults(handler=cmd_build_quasi)

    p = sub.add_parser("mult", parents=[common], help="Product of two almost-Riordan (or quasi-Riordan) arrays")
    for name in ("d1", "g1", "f1", "d2", "g2", "f2"):
        p.add_argument(f"--{name}", type=str)
    p.add_argument("--order", type=int)
    p.add_argument("--quasi", action="store_true", help="Multiply quasi-Riordan arrays [g1, f1][g2, f2]")
    p.set_defaults(handler=cmd_mult)

    p = sub.add_parser("azw", parents=[common], help="A-, Z- and W-sequences")
    _add_gf_options(p)
    p.set_defaults(order=6)
    p.add_argument("--quasi", action="store_true", help="Treat --g/--f as the quasi-Riordan array [g, f]")
    p.set_defaults(handler=cmd_azw)

    p = sub.add_parser("production", parents=[common], help="Window of the production matrix")
    _add_gf_options(p)
    _add_production_options(p)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int)
    p.set_defaults(handler=cmd_production)

    p = sub.add_parser("extract-production", parents=[common], help="Production matrix of a window file")
    p.add_argument("--matrix", type=str, required=True)
    p.set_defaults(handler=cmd_extract_production)

    p = sub.add_parser("recover", parents=[common], help="(d | g, f) from tridiagonal production data")
    _add_production_options(p)
    p.add_argument("--d0", type=parse_rational, default=parse_rational(1))
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--rows", type=int, help="Print the window instead of the series")
    p.set_defaults(handler=cmd_recover)

    p = sub.add_parser("tp-check", parents=[common], help="Windowed total-positivity screen")
    _add_gf_options(p)
    p.add_argument("--matrix", type=str, help="Window file (.json or .csv)")
    p.add_argument("--quasi", action="store_true")
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--max-order", type=int)
    p.add_argument("--strategy", choices=["all", "contiguous_rows"], default="all")
    p.add_argument("--budget", type=int, help="Cap on the number of minors (default RIORDAN_TP_MAX_MINORS)")
    p.set_defaults(handler=cmd_tp_check)

    p = sub.add_parser("jacobi-check", parents=[common], help="Continuant screen of a tridiagonal matrix")
    _add_production_options(p)
    p.add_argument("--matrix", type=str)
    p.add_argument("--rows", type=int, default=8)
    p.add_argument("--max-order", type=int)
    p.set_defaults(handler=cmd_jacobi_check)

    p = sub.add_parser("det-t", parents=[common], help="Determinants of the Toeplitz tridiagonal T_n")
    for name in ("a0", "a1", "a2"):
        p.add_argument(f"--{name}", type=parse_rational, required=True)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--find-negative", action="store_true", help="Report the first n with det(T_n) < 0")
    p.add_argument("--limit", type=int, help="Largest n searched")
    p.set_defaults(handler=cmd_det_t)

    p = sub.add_parser("det-j", parents=[common], help="Leading principal minor of the production matrix")
    _add_production_options(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_det_j)

    p = sub.add_parser("thm34", parents=[common], help="Closed-form TP conditions for tridiagonal production data")
    _add_production_options(p)
    p.set_defaults(handler=cmd_thm34)

    p = sub.add_parser("region", parents=[common], help="Membership in a family's feasible region")
    p.add_argument("--family", type=str, required=True)
    p.add_argument("--alpha", type=parse_rational, required=True)
    p.add_argument("--beta", type=parse_rational, required=True)
    p.add_argument("--compare", action="store_true", help="Also report the theorem and exact verdicts")
    p.set_defaults(handler=cmd_region)

    p = sub.add_parser("region-grid", parents=[common], help="Feasible region on a grid, as CSV")
    p.add_argument("--family", type=str, required=True)
    for name in ("alpha-min", "alpha-max", "beta-min", "beta-max"):
        p.add_argument(f"--{name}", type=parse_rational, required=True)
    p.add_argument("--step", type=parse_rational, required=True)
    p.set_defaults(handler=cmd_region_grid)

    p = sub.add_parser("pf-check", parents=[common], help="Polya frequency test of a generating function")
    p.add_argument("--p", type=str, required=True)
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--max-order", type=int)
    p.add_argument("--order", type=int)
    p.set_defaults(handler=cmd_pf_check)

    p = sub.add_parser("verify-paper", parents=[common], help="Replay the worked-example corpus")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", dest="ids", action="append", default=[])
    p.add_argument("--corpus", type=str, help="Corpus file (default RIORDAN_CORPUS_PATH or the packaged data)")
    p.add_argument("--verbose", action="store_true", help="List passing checks too")
    p.set_defaults(handler=cmd_verify_paper)

    return parser


def _error_output(exc: Exception, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({
            "error": type(exc).__name__,
            "message": getattr(exc, "message", str(exc)),
            "offset": getattr(exc, "offset", None),
        })
    return f"error: {exc}"


def _fail(exc: Exception, fmt: str, code: int) -> int:
    print(_error_output(exc, fmt), file=sys.stdout if fmt == "json" else sys.stderr)
    return code


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one riordan-tp command.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        The exit code
    """
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    handler: Callable[[argparse.Namespace], CommandResult] = args.handler
    try:
        result = handler(args)
        _write(result.render(args.format), args.out)
        return result.exit_code
    except (GFSyntaxError, InvalidArgument, ValueError, OSError) as exc:
        return _fail(exc, args.format, EXIT_USAGE)
    except RiordanError as exc:
        logger.debug("command failed", exc_info=True)
        return _fail(exc, args.format, EXIT_EVALUATION)


if __name__ == "__main__":
    sys.exit(main())
