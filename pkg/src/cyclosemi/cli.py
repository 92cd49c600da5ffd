"""Command-line front end.

The CLI is a thin HTTP client: every command calls the FastAPI service
and formats the response.  By default it talks to an in-process
instance of the app; pass --server to target a running deployment
(started with ``cyclosemi serve``).

Exit codes: 0 success, 1 a mathematical assertion failed (a scan row
disagrees, a band or certificate check fails), 2 usage or input error.
"""
from __future__ import annotations

import csv
import json
import sys

import click
import httpx

from . import __version__

EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # in-process: route requests straight into the ASGI app
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

        from .service import create_app

        return TestClient(create_app(), base_url="http://cyclosemi.local")


def _request(ctx: click.Context, method: str, path: str, **kwargs) -> dict:
    with _client(ctx.obj.get("server")) as client:
        response = client.request(method, path, **kwargs)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        ctx.exit(EXIT_USAGE)
    return response.json()


def _emit_json(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2))


@click.group()
@click.version_option(__version__, prog_name="cyclosemi")
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Symmetry and cyclotomicity of numerical semigroups."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("generators", nargs=-1, required=True, type=int)
@click.pass_context
def analyze(ctx: click.Context, generators: tuple[int, ...]) -> None:
    """Full analysis record for the semigroup generated by GENERATORS."""
    payload = _request(ctx, "POST", "/analyze", json={"generators": list(generators)})
    _emit_json(payload)


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--t", required=True, type=int)
@click.pass_context
def family(ctx: click.Context, n: int, t: int) -> None:
    """Analysis of the (n, t) family member, with the closed-form
    polynomial agreement flag."""
    payload = _request(ctx, "GET", "/family", params={"n": n, "t": t})
    _emit_json(payload)


@main.command()
@click.option("--t", required=True, type=int)
@click.option("--n-min", required=True, type=int)
@click.option("--n-max", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.pass_context
def scan(ctx: click.Context, t: int, n_min: int, n_max: int, fmt: str) -> None:
    """Classify every family member for n in [n-min, n-max]; exits 0
    only when every row matches the expected verdict."""
    payload = _request(ctx, "GET", "/scan",
                       params={"t": t, "n_min": n_min, "n_max": n_max})
    if fmt == "json":
        _emit_json(payload)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "t", "embedding_dimension", "symmetric",
                         "cyclotomic", "expected_dimension", "agree"])
        for row in payload["rows"]:
            writer.writerow([row["n"], row["t"], row["embedding_dimension"],
                             row["symmetric"], row["cyclotomic"],
                             row["expected_dimension"], row["agree"]])
    if not payload["all_agree"]:
        ctx.exit(EXIT_MATH_FAILURE)


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--t", required=True, type=int)
@click.option("--band", is_flag=True, help="Check the root-modulus band (t=0 only).")
@click.option("--count", is_flag=True, help="Count unit-circle roots of Q.")
@click.option("--certificate", is_flag=True, help="Run the interval sign certificate.")
@click.option("--no-roots", is_flag=True, help="Skip the full complex root list.")
@click.option("--samples-csv", type=click.Path(dir_okay=False, writable=True),
              default=None, help="Also write (theta, Q(theta)) samples as CSV.")
@click.option("--samples-points", type=int, default=1024, show_default=True)
@click.pass_context
def roots(ctx: click.Context, n: int, t: int, band: bool, count: bool,
          certificate: bool, no_roots: bool, samples_csv: str | None,
          samples_points: int) -> None:
    """Root location for the (n, t) family polynomial."""
    payload = _request(ctx, "GET", "/roots", params={
        "n": n, "t": t, "band": band, "count": count,
        "certificate": certificate, "include_roots": not no_roots,
    })
    _emit_json(payload)
    if samples_csv:
        samples = _request(ctx, "GET", "/qsamples",
                           params={"n": n, "t": t, "points": samples_points})
        with open(samples_csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["theta", "q"])
            writer.writerows(zip(samples["theta"], samples["q"]))
    failed = (
        (payload.get("band") and not payload["band"]["passed"])
        or (payload.get("certificate") and not payload["certificate"]["all_flags_hold"])
    )
    if failed:
        ctx.exit(EXIT_MATH_FAILURE)


@main.command()
@click.option("--max-genus", required=True, type=int)
@click.option("--workers", type=int, default=None,
              help="Worker processes; CYCLOSEMI_WORKERS overrides the default of 1.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.pass_context
def census(ctx: click.Context, max_genus: int, workers: int | None, fmt: str) -> None:
    """Enumerate all semigroups of genus <= max-genus and tally
    symmetric/cyclotomic counts per (genus, embedding dimension)."""
    params = {"max_genus": max_genus}
    if workers is not None:
        params["workers"] = workers
    payload = _request(ctx, "GET", "/census", params=params)
    if fmt == "json":
        _emit_json(payload)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["genus", "e", "total", "symmetric", "cyclotomic", "sym_not_cyc"])
        for row in payload["rows"]:
            writer.writerow([row["genus"], row["embedding_dimension"], row["total"],
                             row["symmetric"], row["cyclotomic"], row["sym_not_cyc"]])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
