"""Command-line front end.

A thin HTTP client over the service app: by default requests are served
in-process through an ASGI transport, so no server needs to be running;
``--server`` points the same commands at a remote instance.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click
import httpx

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

_COLUMNS = (
    "id",
    "provenance",
    "params",
    "lhs",
    "rhs",
    "abs_error",
    "rel_error",
    "terms_used",
    "accelerated",
    "passed",
    "wall_time_ms",
)


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _call(client: httpx.Client, method: str, path: str, payload=None) -> dict | list:
    response = client.request(method, path, json=payload)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(EXIT_USAGE)
    return response.json()


def _params_payload(z, m, extra) -> dict:
    params: dict[str, str] = {}
    if z is not None:
        params["z"] = z
    if m is not None:
        params["m"] = str(m)
    for item in extra:
        if "=" not in item:
            raise click.UsageError(f"--param expects name=value (got {item!r})")
        name, value = item.split("=", 1)
        params[name.strip()] = value.strip()
    return params


def _number_str(doc) -> str:
    if doc is None:
        return ""
    dec = doc["decimal"]
    if isinstance(dec, dict):
        im = dec["im"]
        sign = "" if im.startswith("-") else "+"
        return f"{dec['re']}{sign}{im}i"
    return dec


def _flat_row(report: dict) -> dict:
    row = dict(report)
    row["params"] = json.dumps(report["params"], sort_keys=True)
    row["lhs"] = _number_str(report["lhs"])
    row["rhs"] = _number_str(report["rhs"])
    return row


def _emit_reports(reports: list[dict], fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(reports, indent=2, sort_keys=True))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for report in reports:
            writer.writerow(_flat_row(report))
        click.echo(buf.getvalue(), nl=False)
        return
    if fmt == "markdown":
        header = ("id", "params", "lhs", "rhs", "rel_error", "terms_used", "status")
        click.echo("| " + " | ".join(header) + " |")
        click.echo("|" + "|".join(" --- " for _ in header) + "|")
        for report in reports:
            row = _flat_row(report)
            status = "PASS" if report["passed"] else "FAIL"
            cells = (
                row["id"],
                row["params"],
                row["lhs"],
                row["rhs"],
                f"{report['rel_error']:.3e}",
                str(report["terms_used"]),
                status,
            )
            click.echo("| " + " | ".join(cells) + " |")
        return
    # text
    for report in reports:
        row = _flat_row(report)
        status = "PASS" if report["passed"] else "FAIL"
        line = (
            f"{status}  {row['id']}  {row['params']}  "
            f"lhs={row['lhs']}  rhs={row['rhs']}  "
            f"rel={report['rel_error']:.3e}  terms={report['terms_used']}"
        )
        if report.get("error"):
            line += f"  error={report['error']}"
        click.echo(line)


def _exit_for(reports: list[dict]):
    sys.exit(EXIT_OK if all(r["passed"] for r in reports) else EXIT_VERIFICATION_FAILED)


_FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv", "markdown"]),
    default="text",
    show_default=True,
)


def _context_payload(mantissa_bits, tol, max_terms) -> dict:
    return {"mantissa_bits": mantissa_bits, "tol": tol, "max_terms": max_terms}


_CTX_OPTIONS = (
    click.option("--mantissa-bits", type=int, default=128, show_default=True),
    click.option("--tol", type=float, default=1e-10, show_default=True),
    click.option("--max-terms", type=int, default=2_000_000, show_default=True),
)


def _with_ctx_options(fn):
    for opt in reversed(_CTX_OPTIONS):
        fn = opt(fn)
    return fn


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; in-process if omitted.")
@click.pass_context
def main(ctx, server):
    """Evaluate and verify harmonic-number series identities."""
    ctx.obj = server


@main.command("list")
@_FORMAT
@click.pass_obj
def list_cmd(server, fmt):
    """List the identity registry with provenance anchors."""
    with _client(server) as client:
        records = _call(client, "GET", "/identities")
    if fmt == "json":
        click.echo(json.dumps(records, indent=2, sort_keys=True))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("id", "kind", "parameters", "provenance", "description"))
        for r in sorted(records, key=lambda r: r["id"]):
            writer.writerow((r["id"], r["kind"], " ".join(r["parameters"]), r["provenance"], r["description"]))
        click.echo(buf.getvalue(), nl=False)
        return
    rows = sorted(records, key=lambda r: r["id"])
    if fmt == "markdown":
        click.echo("| id | kind | parameters | provenance |")
        click.echo("| --- | --- | --- | --- |")
        for r in rows:
            click.echo(f"| {r['id']} | {r['kind']} | {' '.join(r['parameters'])} | {r['provenance']} |")
        return
    for r in rows:
        params = f" ({', '.join(r['parameters'])})" if r["parameters"] else ""
        click.echo(f"{r['id']}{params}: {r['description']}  [{r['provenance']}]")


@main.command()
@click.option("--id", "identity_id", required=True)
@click.option("--z", default=None, help='Series parameter z ("p/q" or "a+bi").')
@click.option("--m", type=int, default=None, help="Half-integer family index m.")
@click.option("--param", "extra", multiple=True, help="Additional name=value parameter.")
@_with_ctx_options
@_FORMAT
@click.option("--exact", is_flag=True, help="Exact rational comparison (finite identities only).")
@click.pass_obj
def verify(server, identity_id, z, m, extra, mantissa_bits, tol, max_terms, fmt, exact):
    """Verify one identity at one parameter point."""
    params = _params_payload(z, m, extra)
    with _client(server) as client:
        if exact:
            result = _call(client, "POST", "/verify-exact", {"id": identity_id, "params": params})
            if fmt == "json":
                click.echo(json.dumps(result, indent=2, sort_keys=True))
            else:
                status = "PASS" if result["passed"] else "FAIL"
                click.echo(
                    f"{status}  {result['id']}  {json.dumps(result['params'], sort_keys=True)}  "
                    f"lhs={result['lhs_coefficients']}  rhs={result['rhs_coefficients']}"
                )
            sys.exit(EXIT_OK if result["passed"] else EXIT_VERIFICATION_FAILED)
        payload = {"id": identity_id, "params": params, **_context_payload(mantissa_bits, tol, max_terms)}
        report = _call(client, "POST", "/verify", payload)
    if fmt == "json":
        click.echo(json.dumps(report, indent=2, sort_keys=True))
    else:
        _emit_reports([report], fmt)
    _exit_for([report])


@main.command()
@click.option("--id", "identity_id", required=True)
@click.option(
    "--grid",
    required=True,
    help='Semicolon-separated points, e.g. "z=0;z=1/2;z=0.3+0.7i" or "m=0;m=1".',
)
@_with_ctx_options
@_FORMAT
@click.pass_obj
def sweep(server, identity_id, grid, mantissa_bits, tol, max_terms, fmt):
    """Verify one identity across a parameter grid."""
    points = []
    for chunk in grid.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        point: dict[str, str] = {}
        for assign in chunk.split(","):
            if "=" not in assign:
                raise click.UsageError(f"grid point {chunk!r} is not name=value")
            name, value = assign.split("=", 1)
            point[name.strip()] = value.strip()
        points.append(point)
    if not points:
        raise click.UsageError("empty grid")
    payload = {"id": identity_id, "grid": points, **_context_payload(mantissa_bits, tol, max_terms)}
    with _client(server) as client:
        result = _call(client, "POST", "/sweep", payload)
    _emit_reports(result["reports"], fmt)
    _exit_for(result["reports"])


@main.command()
@click.option("--id", "ids", multiple=True, help="Restrict to these identities (repeatable).")
@_with_ctx_options
@_FORMAT
@click.pass_obj
def report(server, ids, mantissa_bits, tol, max_terms, fmt):
    """Run the full canonical verification suite."""
    payload = _context_payload(mantissa_bits, tol, max_terms)
    if ids:
        payload["ids"] = list(ids)
    with _client(server) as client:
        result = _call(client, "POST", "/report", payload)
    _emit_reports(result["reports"], fmt)
    passed = sum(1 for r in result["reports"] if r["passed"])
    if fmt in ("text", "markdown"):
        click.echo(f"\n{passed}/{len(result['reports'])} verifications passed")
    _exit_for(result["reports"])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
