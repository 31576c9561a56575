"""Command-line front end: evaluation, coefficients, residual analysis, golden tables.

Numeric output is plain decimal strings at the full requested precision, so
CSV/JSON emission round-trips losslessly and identical invocations produce
identical bytes.  Rational parameters are accepted as p/q strings and
converted exactly before rounding.
"""

import functools
import json
import os
from dataclasses import replace
from fractions import Fraction

import click
from mpmath import mp

from . import asym, coeffs as coeffs_mod, verify
from .errors import HyperBesselError
from .params import derive_params
from .precision import DEFAULT_DPS, to_mpf
from .reference import humbert_J, series_eval

ENV_DPS = "HYPERBESSEL_DPS"


def _numeric_errors(fn):
    """Map package numeric errors to exit status 1 with the error name."""
    @functools.wraps(fn)
    def inner(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except HyperBesselError as exc:
            raise click.ClickException(f"{type(exc).__name__}: {exc}")
    return inner


def _parse_fraction(text, label):
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"cannot parse {label} value {text!r} (use p/q or a decimal)")


def _parse_b_option(b, label="-b"):
    return tuple(_parse_fraction(part, label) for part in str(b).split(","))


def _default_dps(precision):
    if precision is not None:
        return precision
    env = os.environ.get(ENV_DPS)
    return int(env) if env else None


def _resolve_order(n3, n4, n5, humbert):
    chosen = [name for name, flag in (("--n3", n3), ("--n4", n4), ("--n5", n5),
                                      ("--humbert", humbert)) if flag]
    if len(chosen) != 1:
        raise click.UsageError("choose exactly one of --n3 / --n4 / --n5 / --humbert")
    return chosen[0]


def _build_params(mode, a, b, precision):
    if mode == "--n3":
        if a is None or b is None:
            raise click.UsageError("--n3 needs -a and -b")
        bs = (_parse_fraction(a, "-a"),) + _parse_b_option(b)
        if len(bs) != 2:
            raise click.UsageError("--n3 takes scalar -a and -b")
        n = 3
    else:
        if b is None or a is not None:
            raise click.UsageError(f"{mode} needs a comma-separated -b list (and no -a)")
        bs = _parse_b_option(b)
        n = {"--n4": 4, "--n5": 5}[mode]
    return derive_params(n, bs, precision=precision or DEFAULT_DPS)


def _parse_x_values(x, x_range):
    if (x is None) == (x_range is None):
        raise click.UsageError("provide exactly one of --x or --x-range start:stop:step")
    if x is not None:
        return [_parse_fraction(x, "--x")]
    parts = str(x_range).split(":")
    if len(parts) != 3:
        raise click.UsageError("--x-range must be start:stop:step")
    start, stop, step = (_parse_fraction(p, "--x-range") for p in parts)
    if step <= 0:
        raise click.UsageError("--x-range step must be positive")
    values = []
    v = start
    while v <= stop:
        values.append(v)
        v += step
    return values


def _emit(rows, headers, fmt, output, summary=None):
    """Render rows (lists of strings) as text, CSV or JSON."""
    if fmt == "csv":
        lines = [",".join(headers)] + [",".join(r) for r in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = json.dumps([dict(zip(headers, r)) for r in rows], indent=2) + "\n"
    else:
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
        for r in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
        text = "\n".join(lines) + "\n"
    if summary and fmt == "text":
        text += summary + "\n"
    if output and output != "-":
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _num(value, digits):
    """Decimal string with a small guard beyond ``digits`` so parsing round-trips."""
    return mp.nstr(value, digits + 3, strip_zeros=True)


def _xstr(xv):
    return mp.nstr(to_mpf(xv, 30), 15, strip_zeros=True)


precision_option = click.option("--precision", "-p", type=int, default=None,
                                help=f"working precision in decimal digits (default: auto; env {ENV_DPS})")
format_option = click.option("--format", "-f", "fmt", type=click.Choice(["text", "csv", "json"]),
                             default="text", help="output format")
output_option = click.option("--output", "-o", default=None, help="output path (default: stdout)")


@click.group()
@click.version_option(package_name="hyperbessel")
def main():
    """Arbitrary-precision hyper-Bessel / extended-order function evaluator."""


@main.command("eval")
@click.option("--n3", is_flag=True, help="order-3 function with -a, -b")
@click.option("--n4", is_flag=True, help="order-4 function with -b b1,b2,b3")
@click.option("--n5", is_flag=True, help="order-5 function with -b b1,...,b4")
@click.option("--humbert", is_flag=True, help="hyper-Bessel J_{m,nu} with -m, -n")
@click.option("-a", default=None, help="first denominator parameter (--n3)")
@click.option("-b", default=None, help="denominator parameter or comma-separated list")
@click.option("-m", "m_order", default=None, help="first hyper-Bessel order (--humbert)")
@click.option("-n", "nu_order", default=None, help="second hyper-Bessel order (--humbert)")
@click.option("--x", default=None, help="evaluation point (x >= 0)")
@click.option("--x-range", default=None, help="range start:stop:step")
@click.option("--target", type=int, default=20, help="target significant digits")
@click.option("--method", type=click.Choice(["series", "compound", "both"]), default="series")
@click.option("--trunc", default="optimal", help="compound truncation: 'optimal' or a term count")
@click.option("--scale", type=click.Choice(["none", "exp-half"]), default="none",
              help="report value scaled by e^(-x/2)")
@precision_option
@format_option
@output_option
@_numeric_errors
def cmd_eval(n3, n4, n5, humbert, a, b, m_order, nu_order, x, x_range, target,
             method, trunc, scale, precision, fmt, output):
    """Evaluate the function by direct summation and/or the compound expansion."""
    precision = _default_dps(precision)
    mode = _resolve_order(n3, n4, n5, humbert)
    xs = _parse_x_values(x, x_range)
    if any(v < 0 for v in xs):
        raise click.UsageError("x must be non-negative")
    truncation = asym.OPTIMAL if trunc == "optimal" else int(trunc)

    if humbert:
        if m_order is None or nu_order is None:
            raise click.UsageError("--humbert needs -m and -n")
        if a is not None or b is not None:
            raise click.UsageError("--humbert takes -m/-n, not -a/-b")
        m_f = _parse_fraction(m_order, "-m")
        nu_f = _parse_fraction(nu_order, "-n")
        params = derive_params(3, (m_f + 1, nu_f + 1), precision=precision or DEFAULT_DPS)
        power = m_f + nu_f
    else:
        params = _build_params(mode, a, b, precision)
        power = None

    methods = ["series", "compound"] if method == "both" else [method]
    out_dps = precision or DEFAULT_DPS
    rows = []
    for xv in xs:
        for meth in methods:
            if meth == "series":
                if humbert:
                    res = humbert_J(m_f, nu_f, xv, target_digits=target, dps=precision)
                else:
                    res = series_eval(params, xv, target_digits=target, dps=precision)
            else:
                res = asym.compound_eval(params, xv, truncation=truncation, dps=precision)
                if humbert and power != 0:
                    with mp.workdps(out_dps):
                        factor = (to_mpf(xv, out_dps) / 3) ** to_mpf(power, out_dps)
                        res = replace(res, value=res.value * factor,
                                      error_estimate=res.error_estimate * abs(factor))
            value = res.value
            if scale == "exp-half":
                with mp.workdps(out_dps):
                    value = value * mp.exp(-to_mpf(xv, out_dps) / 2)
            rows.append([_xstr(xv), _num(value, out_dps), res.method, str(res.terms_used),
                         _num(res.error_estimate, 8)])
    _emit(rows, ["x", "value", "method", "terms", "error_estimate"], fmt, output)


@main.command("coeffs")
@click.option("--n3", is_flag=True)
@click.option("--n4", is_flag=True)
@click.option("--n5", is_flag=True)
@click.option("-a", default=None)
@click.option("-b", default=None)
@click.option("-M", "m_count", type=int, default=11, help="number of coefficients c_0..c_{M-1}")
@click.option("--method", type=click.Choice(["riney", "stirling", "both"]), default="stirling")
@precision_option
@format_option
@output_option
@_numeric_errors
def cmd_coeffs(n3, n4, n5, a, b, m_count, method, precision, fmt, output):
    """Tabulate the expansion coefficients c_j by one or both engines."""
    precision = _default_dps(precision)
    mode = _resolve_order(n3, n4, n5, False)
    params = _build_params(mode, a, b, precision)
    out_dps = params.dps
    tables = {}
    if method in ("riney", "both"):
        tables["riney"] = coeffs_mod.riney_coeffs(params, m_count)
    if method in ("stirling", "both"):
        tables["stirling"] = coeffs_mod.stirling_matching_coeffs(params, m_count)
    headers = ["j"] + [f"c_{name}" for name in tables]
    rows = []
    for j in range(m_count):
        rows.append([str(j)] + [_num(t[j], out_dps) for t in tables.values()])
    summary = None
    if method == "both":
        with mp.workdps(out_dps):
            disc = max(abs(u - v) for u, v in zip(tables["riney"].c, tables["stirling"].c))
        summary = f"max cross-method discrepancy: {_num(disc, 6)}"
    _emit(rows, headers, fmt, output, summary=summary)
    if summary and fmt != "text":
        click.echo(summary, err=True)


@main.command("residual")
@click.option("--n3", is_flag=True)
@click.option("--n4", is_flag=True)
@click.option("--n5", is_flag=True)
@click.option("-a", default=None)
@click.option("-b", default=None)
@click.option("--x", required=True)
@click.option("--j0", default="auto", help="dominant truncation index (inclusive), or 'auto'")
@precision_option
@format_option
@output_option
@_numeric_errors
def cmd_residual(n3, n4, n5, a, b, x, j0, precision, fmt, output):
    """Compare the numerically extracted residual with the exponentially small expansion."""
    precision = _default_dps(precision)
    mode = _resolve_order(n3, n4, n5, False)
    params = _build_params(mode, a, b, precision)
    xv = _parse_fraction(x, "--x")
    if xv <= 0:
        raise click.UsageError("residual analysis needs x > 0")
    table = coeffs_mod.stirling_matching_coeffs(params, max(40, int(2 * xv) + 16))
    if j0 == "auto":
        j0_val = asym.optimal_truncation_index(table, xv)
    else:
        j0_val = int(j0)
    resid = asym.residual_F(params, xv, j0_val)
    es, _ = asym.exp_small_optimal(params, xv, table=table, dps=70)
    with mp.workdps(40):
        agreement = mp.nstr(abs(resid - es) / abs(es), 4) if es != 0 else "n/a"
    rows = [[_xstr(xv), str(j0_val), _num(resid, 10), _num(es, 10), agreement]]
    _emit(rows, ["x", "j0", "residual", "exp_small", "rel_difference"], fmt, output)


@main.command("tables")
@click.option("--table", "which", default="all", help="1 | 2 | 3 | 4 | all")
@format_option
@output_option
@_numeric_errors
def cmd_tables(which, fmt, output):
    """Reproduce the golden reference tables; exit nonzero when any row fails."""
    if which == "all":
        reports = verify.reproduce_all()
    elif which in verify.REPRODUCERS:
        reports = (verify.REPRODUCERS[which](),)
    else:
        raise click.UsageError(f"unknown table {which!r} (use 1, 2, 3, 4 or all)")
    if fmt == "json":
        text = "[\n" + ",\n".join(r.to_json() for r in reports) + "\n]\n"
    else:
        text = "\n\n".join(r.to_text() for r in reports) + "\n"
    if output and output != "-":
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if not all(r.passed for r in reports):
        raise SystemExit(1)


if __name__ == "__main__":
    main()
