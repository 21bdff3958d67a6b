"""
Command line interface for gamma-expansions.

    $ gamma-expansions --help

    Commands:
      coeffs      exact coefficients of one expansion
      pairs       g_m and v_m of the even-power expansion
      table1      exact decimal digits of the five comparison formulas
      table2      exact decimal digits of the even-power expansion
      conjecture  v_m and their distance to 1/4
      eval        one approximation at one point

Every command takes --format {markdown,csv,json}, --precision <digits> and
--out <path>; --precision only matters where floating point is involved.
Settings not given as flags come from GAMMAEXP_* environment variables.
"""

import functools
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

import click
from mpmath import nstr

from .core.benchmark import (
    FAMILY_LABELS,
    PUBLISHED_TABLE1,
    PUBLISHED_TABLE2,
    EddGrid,
    cell_notes,
    compare_grid,
    conjecture_evidence,
    format_edd,
    strictly_decreasing,
    table1,
    table2,
)
from .core.coeff_families import (
    central_binomial_coeffs,
    central_binomial_shifted,
    gosper_base_coeffs,
    karatsuba_coeffs,
    laplace_coeffs,
    mortici_coeffs,
    mortici_doubled_coeffs,
    nemes_even_pairs,
    nemes_even_pairs_decimal,
    nemes_shifted_coeffs,
    ramanujan_coeffs,
    stirling_log_coeffs,
)
from .core.errors import GammaExpansionError, OrderRangeError
from .core.exact_arith import as_rational, decimal_string, format_rational
from .core.precision_eval import ApproximationSpec, edd
from .utils.logs import configure_logging
from .utils.output import FORMATS, OutputDocument, write_document
from .utils.run_monitor import RunMonitor
from .utils.settings import Settings, get_settings

logger = logging.getLogger(__name__)

EXIT_FAILURE = 2


def _series_values(series) -> Tuple[Tuple[Fraction, ...], Dict[str, str]]:
    return series.coefficients, ({"exponent_offset": series.exponent_offset} if series.exponent_offset else {})


# name -> (minimum order, generator returning (values, extra params))
COEFF_FAMILIES: Dict[str, Tuple[int, Callable[[int], Tuple[Tuple[Fraction, ...], Dict[str, str]]]]] = {
    "laplace": (0, lambda n: _series_values(laplace_coeffs(n))),
    "stirling_log": (1, lambda n: _series_values(stirling_log_coeffs(n))),
    "ramanujan": (0, lambda n: _series_values(ramanujan_coeffs(n))),
    "karatsuba": (0, lambda n: _series_values(karatsuba_coeffs(n))),
    "mortici": (0, lambda n: _series_values(mortici_coeffs(n))),
    "mortici_doubled": (0, lambda n: _series_values(mortici_doubled_coeffs(n))),
    "gosper_base": (0, lambda n: (gosper_base_coeffs(n).c, {})),
    "nemes_shifted": (0, lambda n: (nemes_shifted_coeffs(n).G, {"shift": "1/4"})),
    "central_binomial": (0, lambda n: _series_values(central_binomial_coeffs(n))),
    "central_binomial_shifted": (0, lambda n: (central_binomial_shifted(n).coefficients, {"shift": "1/4"})),
}


def reports_errors(func):
    """Turn library errors into a one-line message and exit status 2"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GammaExpansionError as e:
            logger.debug("command failed", exc_info=True)
            click.echo(f"❌ {e}", err=True)
            sys.exit(EXIT_FAILURE)
    return wrapper


def output_options(func):
    func = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                        help="Write here instead of standard output.")(func)
    func = click.option("--precision", type=click.IntRange(min=21), default=None,
                        help="Working precision in significant digits for evaluations and the floating-point "
                             "pair continuation; exact output ignores it [env GAMMAEXP_PRECISION].")(func)
    func = click.option("--format", "fmt", type=click.Choice(FORMATS), default="markdown", show_default=True)(func)
    return func


def _settings(ctx: click.Context, **flags) -> Settings:
    return ctx.obj.override(**flags)


@click.group()
@click.option("--log-level", default=None, help="Logging level [env GAMMAEXP_LOG_LEVEL].")
@click.option("--log-file", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Also write log records to this file.")
@click.pass_context
@reports_errors
def cli(ctx: click.Context, log_level: Optional[str], log_file: Optional[Path]):
    settings = get_settings().override(log_level=log_level.upper() if log_level else None)
    try:
        configure_logging(settings.log_level, log_file)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--log-level")
    ctx.obj = settings


@cli.command()
@click.argument("family", type=click.Choice(sorted(COEFF_FAMILIES)))
@click.argument("order", type=int)
@output_options
@click.pass_context
@reports_errors
def coeffs(ctx, family, order, fmt, precision, out):
    """Exact coefficients of FAMILY up to ORDER."""
    settings = _settings(ctx, precision=precision)
    minimum, generate = COEFF_FAMILIES[family]
    if not minimum <= order <= settings.max_order:
        raise OrderRangeError(f"{family} order must lie in {minimum}..{settings.max_order}, got {order}")
    values, extra = generate(order)
    doc = OutputDocument("coeffs", {"family": family, "order": order, **extra}, ["n", "value"], format=fmt)
    for n, value in enumerate(values):
        doc.add_row(n=n, value=format_rational(value))
    write_document(doc, out)


@cli.command()
@click.argument("m", type=click.IntRange(min=0))
@click.option("--mode", type=click.Choice(["exact", "decimal"]), default="exact", show_default=True)
@click.option("--digits", type=click.IntRange(min=1), default=15, show_default=True,
              help="Digits after the point in decimal mode (truncated).")
@click.option("--float-pairs/--no-float-pairs", default=None,
              help="Continue past the exact limit in floating point [env GAMMAEXP_FLOAT_PAIRS].")
@output_options
@click.pass_context
@reports_errors
def pairs(ctx, m, mode, digits, float_pairs, fmt, precision, out):
    """g_0..g_M and v_1..v_M of the even-power expansion."""
    settings = _settings(ctx, precision=precision, float_pairs=float_pairs)
    params = {"M": m, "mode": mode}
    if mode == "decimal":
        params["digits"] = digits
    doc = OutputDocument("pairs", params, ["n", "g", "v"], format=fmt)

    with RunMonitor("pairs"):
        if m <= settings.exact_pair_limit:
            seq = nemes_even_pairs(m)
            if mode == "exact":
                show = format_rational
            else:
                show = functools.partial(decimal_string, places=digits)
            doc.add_row(n=0, g=show(seq.g[0]), v="")
            for n, (g, v) in enumerate(seq.pairs(), start=1):
                doc.add_row(n=n, g=show(g), v=show(v))
        elif mode == "exact":
            raise OrderRangeError(f"exact mode is limited to M <= {settings.exact_pair_limit}, got {m}")
        elif not settings.float_pairs:
            raise OrderRangeError(
                f"M = {m} is past the exact limit {settings.exact_pair_limit}; pass --float-pairs to continue")
        else:
            logger.warning("⚠️ pairs past M = %d come from the floating-point continuation", settings.exact_pair_limit)
            doc.params["precision"] = settings.precision
            seq = nemes_even_pairs_decimal(m, max(digits + 10, settings.precision))
            doc.add_row(n=0, g=decimal_string(Fraction(1), digits), v="")
            for n, (g, v) in enumerate(seq.pairs(), start=1):
                doc.add_row(n=n, g=decimal_string(g, digits), v=decimal_string(v, digits))
    write_document(doc, out)


def _table_document(grid: EddGrid, command: str, fmt: str, settings: Settings) -> OutputDocument:
    columns = ["formula", "x"] + [f"({c})" for c in grid.columns] + ["note"]
    doc = OutputDocument(command, {"precision": settings.precision}, columns, format=fmt)
    for family, x in grid.rows():
        cells = {f"({c})": format_edd(grid.cell(family, x, c)) for c in grid.columns}
        cells["note"] = "; ".join(cell_notes(family, x))
        doc.add_row(formula=FAMILY_LABELS[family], x=x, **cells)
    return doc


def _comparison_document(grid: EddGrid, published, command: str, fmt: str, settings: Settings) -> OutputDocument:
    columns = ["formula", "x", "column", "computed", "published", "delta", "status"]
    doc = OutputDocument(command, {"precision": settings.precision, "compare": True}, columns, format=fmt)
    for c in compare_grid(grid, published):
        doc.add_row(
            formula=FAMILY_LABELS[c.family],
            x=c.x,
            column=c.column,
            computed=format_edd(grid.cell(c.family, c.x, c.column)),
            published=f"{c.published:.1f}",
            delta=f"{c.delta:+.3f}",
            status=c.status,
        )
    return doc


def _table_command(name: str, build, published):
    @click.option("--compare", is_flag=True, help="List each cell next to the published value.")
    @click.option("--workers", type=click.IntRange(min=1), default=None,
                  help="Cells evaluated concurrently [env GAMMAEXP_WORKERS].")
    @output_options
    @click.pass_context
    @reports_errors
    def command(ctx, compare, workers, fmt, precision, out):
        settings = _settings(ctx, precision=precision, workers=workers)
        with RunMonitor(name):
            grid = build(settings.precision_context(), settings.workers)
        if compare:
            doc = _comparison_document(grid, published, name, fmt, settings)
        else:
            doc = _table_document(grid, name, fmt, settings)
        write_document(doc, out)
    return command


cli.command("table1", help="Exact decimal digits of the five comparison formulas.")(
    _table_command("table1", table1, PUBLISHED_TABLE1))
cli.command("table2", help="Exact decimal digits of the even-power expansion.")(
    _table_command("table2", table2, PUBLISHED_TABLE2))


@cli.command()
@click.argument("m", type=click.IntRange(min=2))
@click.option("--digits", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--float-pairs/--no-float-pairs", default=None,
              help="Continue past the exact limit in floating point [env GAMMAEXP_FLOAT_PAIRS].")
@output_options
@click.pass_context
@reports_errors
def conjecture(ctx, m, digits, float_pairs, fmt, precision, out):
    """v_1..v_M and |v_m - 1/4|."""
    settings = _settings(ctx, precision=precision, float_pairs=float_pairs)
    with RunMonitor("conjecture"):
        rows = conjecture_evidence(m, digits, settings.float_pairs, settings.exact_pair_limit,
                                   working_digits=settings.precision)
    if not strictly_decreasing(Fraction(r.distance) for r in rows[1:]):
        logger.warning("⚠️ |v_m - 1/4| is not strictly decreasing from m = 2 at %d digits", digits)
    doc = OutputDocument("conjecture", {"M": m, "digits": digits}, ["m", "v", "distance"], format=fmt)
    for r in rows:
        doc.add_row(m=r.m, v=r.v, distance=r.distance)
    write_document(doc, out)


@cli.command("eval")
@click.argument("family")
@click.argument("order", type=int)
@click.argument("x")
@click.option("--digits", type=click.IntRange(min=1), default=30, show_default=True,
              help="Significant digits shown for each value.")
@output_options
@click.pass_context
@reports_errors
def eval_command(ctx, family, order, x, digits, fmt, precision, out):
    """One approximation FAMILY at ORDER, evaluated at the exact point X."""
    settings = _settings(ctx, precision=precision)
    spec = ApproximationSpec(family, order)
    point = as_rational(x)
    result = edd(spec, point, settings.precision_context())
    columns = ["family", "order", "x", "log_approximation", "log_gamma", "edd", "sign"]
    doc = OutputDocument("eval", {"family": spec.family.value, "order": order, "x": format_rational(point),
                                  "digits": digits, "precision": settings.precision}, columns, format=fmt)
    doc.add_row(
        family=spec.family.value,
        order=order,
        x=format_rational(point),
        log_approximation=nstr(result.log_approximation, digits),
        log_gamma=nstr(result.log_reference, digits),
        edd=nstr(result.edd, digits),
        sign=result.sign,
    )
    write_document(doc, out)


def main():
    cli(prog_name="gamma-expansions")


if __name__ == "__main__":
    main()
