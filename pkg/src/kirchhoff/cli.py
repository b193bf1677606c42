"""Command-line front end.

A thin client over the service layer: each subcommand builds the same request
model the HTTP API accepts and either calls the handler in-process (default)
or posts it to a running server (--server URL).
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import service
from .extremal import generate_table, table_to_csv, table_to_json, table_to_text
from .formats import matrix_to_csv, matrix_to_text, sig_digits
from .graphs import DisconnectedGraphError
from .linalg import SingularMatrixError, SizeLimitError

DIGITS_ENV = "KIRCH_DIGITS"
DEFAULT_FILE_DIGITS = 6


def _default_digits() -> int:
    raw = os.environ.get(DIGITS_ENV)
    if raw is None:
        return DEFAULT_FILE_DIGITS
    try:
        return int(raw)
    except ValueError:
        raise click.UsageError(f"{DIGITS_ENV} must be an integer, got {raw!r}")


def _graph_input(spec: str | None, file: str | None) -> service.GraphInput:
    if (spec is None) == (file is None):
        raise click.UsageError("provide exactly one of --spec or --file")
    if spec is not None:
        return service.GraphInput(spec=spec)
    try:
        with open(file, encoding="utf-8") as fh:
            return service.GraphInput(edge_list=fh.read())
    except OSError as exc:
        raise click.UsageError(f"cannot read {file}: {exc}")


def _call(server: str | None, path: str, handler, request):
    """Dispatch in-process or to a remote server; returns the response model."""
    if server is None:
        try:
            return handler(request)
        except (
            DisconnectedGraphError,
            SingularMatrixError,
            SizeLimitError,
            ValueError,
            RuntimeError,
        ) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=request.model_dump(), timeout=600)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(1)
    return resp.json()


def _response_dict(result) -> dict:
    return result if isinstance(result, dict) else result.model_dump(by_alias=True)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx, server):
    """Exact resistance distances, Kirchhoff indices and extremal search."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


_input_options = [
    click.option("--spec", default=None, help='Partition spec, e.g. "2,3,4" or "2^3,3^2,5,7".'),
    click.option("--file", default=None, type=click.Path(), help="Edge-list file."),
]


def with_input(cmd):
    for opt in reversed(_input_options):
        cmd = opt(cmd)
    return cmd


@main.command()
@with_input
@click.option("--pair", nargs=2, type=int, default=None, help="Print a single entry.")
@click.option("--format", "fmt", type=click.Choice(["exact", "decimal", "csv", "json"]), default=None)
@click.option("--digits", type=int, default=None)
@click.pass_context
def resdist(ctx, spec, file, pair, fmt, digits):
    """Effective resistance matrix (closed form for specs, oracle for files)."""
    req = service.ResistanceRequest(input=_graph_input(spec, file), pair=pair)
    result = _response_dict(
        _call(ctx.obj["server"], "/resistance", service.handle_resistance, req)
    )
    if fmt is None:
        fmt = "exact" if spec is not None else "decimal"
    digits = digits if digits is not None else _default_digits()
    if result.get("pair_value") is not None:
        from fractions import Fraction

        value = Fraction(result["pair_value"])
        click.echo(result["pair_value"] if fmt == "exact" else sig_digits(value, digits))
        return
    from .linalg import RatMatrix

    matrix = RatMatrix(result["matrix"])
    if fmt == "exact":
        click.echo(matrix_to_text(matrix))
    elif fmt == "decimal":
        click.echo(matrix_to_text(matrix, digits=digits))
    elif fmt == "csv":
        click.echo(matrix_to_csv(matrix), nl=False)
    else:
        click.echo(json.dumps(result, indent=2))


def _index_command(ctx, spec, file, digits, all_methods, fmt, path, handler):
    req = service.IndexRequest(input=_graph_input(spec, file), all_methods=all_methods)
    if digits is None and fmt is None:
        fmt = "exact" if spec is not None else "decimal"
    elif fmt is None:
        fmt = "decimal"
    digits = digits if digits is not None else _default_digits()
    result = _response_dict(_call(ctx.obj["server"], path, handler, req))
    if fmt == "json":
        click.echo(json.dumps(result, indent=2))
        return
    from fractions import Fraction

    value = Fraction(result["exact"])
    click.echo(result["exact"] if fmt == "exact" else sig_digits(value, digits))
    if result.get("methods"):
        for name, rendered in sorted(result["methods"].items()):
            click.echo(f"  {name}: {rendered}")
        click.echo("  routes cross-checked")


def _index_opts(cmd):
    cmd = click.option("--format", "fmt", type=click.Choice(["exact", "decimal", "json"]), default=None)(cmd)
    cmd = click.option("--all-methods", is_flag=True, help="Print every route and assert agreement.")(cmd)
    cmd = click.option("--digits", type=int, default=None)(cmd)
    return with_input(cmd)


@main.command()
@_index_opts
@click.pass_context
def kirchhoff(ctx, spec, file, digits, all_methods, fmt):
    """Kirchhoff index (half the sum of all resistance distances)."""
    _index_command(ctx, spec, file, digits, all_methods, fmt, "/kirchhoff", service.handle_kirchhoff)


@main.command()
@_index_opts
@click.pass_context
def dkirchhoff(ctx, spec, file, digits, all_methods, fmt):
    """Degree Kirchhoff index (degree-weighted resistance sum)."""
    _index_command(ctx, spec, file, digits, all_methods, fmt, "/degree-kirchhoff", service.handle_degree_kirchhoff)


@main.command()
@with_input
@click.option("--all-methods", is_flag=True)
@click.pass_context
def trees(ctx, spec, file, all_methods):
    """Spanning-tree count."""
    req = service.IndexRequest(input=_graph_input(spec, file), all_methods=all_methods)
    result = _response_dict(_call(ctx.obj["server"], "/spanning-trees", service.handle_trees, req))
    click.echo(result["count"])
    if result.get("methods"):
        for name, rendered in sorted(result["methods"].items()):
            click.echo(f"  {name}: {rendered}")
        click.echo("  all methods agree")


@main.command()
@with_input
@click.pass_context
def spectrum(ctx, spec, file):
    """Laplacian spectrum (exact for specs, float with residual for files)."""
    req = service.IndexRequest(input=_graph_input(spec, file))
    result = _response_dict(_call(ctx.obj["server"], "/spectrum", service.handle_spectrum, req))
    if result.get("exact") is not None:
        click.echo(" ".join(result["exact"]))
    else:
        click.echo(" ".join(repr(x) for x in result["values"]))
        click.echo(f"residual: {result['residual']:.3e}", err=False)


@main.command()
@click.option("--spec", required=True)
@click.option("--t", "t_raw", required=True, help="Comma-separated intersection counts, one per part.")
@click.pass_context
def minorpoly(ctx, spec, t_raw):
    """Factored and expanded char poly of a Laplacian minor of a spec graph."""
    try:
        t = [int(x) for x in t_raw.split(",")]
    except ValueError:
        raise click.UsageError(f"malformed --t value {t_raw!r}")
    req = service.MinorPolyRequest(spec=spec, t=t)
    result = _response_dict(_call(ctx.obj["server"], "/minor-poly", service.handle_minor_poly, req))
    click.echo(json.dumps(result, indent=2))


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--index", type=click.Choice(["kf", "dkf"]), default="kf")
@click.pass_context
def extremal(ctx, n, r, index):
    """Brute-force extremal search, compared with the predicted partitions."""
    req = service.ExtremalRequest(n=n, r=r, index=index)
    result = _response_dict(_call(ctx.obj["server"], "/extremal", service.handle_extremal, req))
    for side in ("min", "max"):
        verdict = "AGREE" if result[f"{side}_agrees"] else "DISAGREE"
        tie = " (tie)" if result[f"{side}_tie"] else ""
        click.echo(
            f"{side}: {result[f'{side}_decimal']} ({result[f'{side}_exact']}) "
            f"at {result['minimizer' if side == 'min' else 'maximizer']}{tie}"
        )
        click.echo(
            f"  theorem: {verdict} (predicted {result[f'predicted_{side}']})"
        )


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--r", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.option("--digits", type=int, default=5)
@click.pass_context
def table(ctx, n, r, fmt, digits):
    """All complete r-partite graphs on n vertices with m, Kf' and Kf."""
    server = ctx.obj["server"]
    if server is not None:
        req = service.TableRequest(n=n, r=r, digits=digits)
        result = _call(server, "/table", service.handle_table, req)
        click.echo(json.dumps(result, indent=2))
        return
    try:
        rows = generate_table(n, r)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if fmt == "text":
        click.echo(table_to_text(rows, digits))
    elif fmt == "csv":
        click.echo(table_to_csv(rows, digits), nl=False)
    else:
        click.echo(table_to_json(rows, digits))


@main.command()
@click.option("--max-n", type=int, default=8)
@click.pass_context
def verify(ctx, max_n):
    """Cross-check closed forms vs oracle vs float spectra; print a summary."""
    from .crosscheck import run_verification, summary_lines

    server = ctx.obj["server"]
    if server is not None:
        req = service.VerifyRequest(max_n=max_n)
        result = _call(server, "/verify", service.handle_verify, req)
        for check in result["checks"]:
            status = "PASS" if check["passed"] else "FAIL"
            click.echo(f"[{status}] {check['name']} ({check['cases']} cases)")
        sys.exit(0 if result["passed"] else 1)
    try:
        results = run_verification(max_n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    for line in summary_lines(results):
        click.echo(line)
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
