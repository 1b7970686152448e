"""Command-line front end, implemented as a thin client of the HTTP service.

By default each command drives the FastAPI application in-process through an
ASGI transport (no socket, no running server needed); pass ``--server URL``
to target a live instance instead, and use ``hvlie serve`` to run one.

Exit codes: 0 on success / all-PASS, 1 when a verification FAILs or an
asserted-zero check finds a nonzero defect, 2 on usage or parse errors.
"""

from __future__ import annotations

import asyncio
import sys
from typing import Any

import click
import httpx

__all__ = ["main"]

_TIMEOUT = 600.0


def _post(server: str | None, path: str, payload: dict) -> tuple[int, Any]:
    if server:
        resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=_TIMEOUT)
        return resp.status_code, resp.json()

    async def go() -> tuple[int, Any]:
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://hvlie.internal", timeout=_TIMEOUT
        ) as client:
            resp = await client.post(path, json=payload)
            return resp.status_code, resp.json()

    return asyncio.run(go())


def _call(ctx: click.Context, path: str, payload: dict) -> Any:
    status, body = _post(ctx.obj.get("server"), path, payload)
    if status >= 400:
        detail = body.get("detail", body) if isinstance(body, dict) else body
        if isinstance(detail, dict):
            message = detail.get("message", str(detail))
            column = detail.get("column")
            if column is not None:
                message = f"{message} (column {column})"
        else:
            message = str(detail)
        click.echo(f"error: {message}", err=True)
        sys.exit(2)
    return body


def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split(":")
        return int(lo_text), int(hi_text)
    except ValueError:
        raise click.UsageError(f"{what} must be 'lo:hi', got {text!r}") from None


def _parse_csv(text: str, what: str) -> list[str]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise click.UsageError(f"{what} must be a comma-separated list")
    return items


@click.group()
@click.option(
    "--server",
    envvar="HVLIE_SERVER",
    default=None,
    help="Base URL of a running service; defaults to in-process execution.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["plain"]),
    default="plain",
    show_default=True,
    help="Output format (only line-oriented plain text is supported).",
)
@click.pass_context
def main(ctx: click.Context, server: str | None, output_format: str) -> None:
    """Exact computations in the twisted Heisenberg-Virasoro algebra."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server
    ctx.obj["format"] = output_format


# expressions may start with a negative rational; let them through as args
_EXPR_ARGS = {"ignore_unknown_options": True}


@main.command(context_settings=_EXPR_ARGS)
@click.argument("e1")
@click.argument("e2")
@click.option("--central", is_flag=True, help="Use the centrally extended bracket.")
@click.pass_context
def bracket(ctx: click.Context, e1: str, e2: str, central: bool) -> None:
    """Lie bracket of two element expressions."""
    body = _call(ctx, "/bracket", {"x": e1, "y": e2, "central": central})
    click.echo(body["result"])


@main.command(context_settings=_EXPR_ARGS)
@click.argument("x")
@click.option("--r-a", default=None, help="First factor of r = a(x)b - b(x)a.")
@click.option("--r-b", default=None, help="Second factor of r.")
@click.option(
    "--delta",
    nargs=3,
    default=None,
    metavar="ALPHA BETA GAMMA",
    help="Use the non-coboundary cocycle with these parameters.",
)
@click.pass_context
def cobracket(ctx, x: str, r_a: str | None, r_b: str | None, delta) -> None:
    """Apply a cobracket (coboundary from r, or the delta family) to x."""
    payload: dict = {"x": x}
    if delta:
        payload.update({"alpha": delta[0], "beta": delta[1], "gamma": delta[2]})
    if r_a is not None:
        payload["r_a"] = r_a
    if r_b is not None:
        payload["r_b"] = r_b
    body = _call(ctx, "/cobracket", payload)
    click.echo(body["text"])


@main.command()
@click.option("--a", "a", required=True, help="First factor of r = a(x)b - b(x)a.")
@click.option("--b", "b", required=True, help="Second factor of r.")
@click.pass_context
def cybe(ctx, a: str, b: str) -> None:
    """Classical Yang-Baxter defect C(r) for r = a(x)b - b(x)a."""
    body = _call(ctx, "/cybe", {"a": a, "b": b})
    click.echo(body["text"])


@main.command("cybe-scan")
@click.option("--m", "m_range", required=True, metavar="LO:HI")
@click.option("--n", "n_range", required=True, metavar="LO:HI")
@click.option("--q", "q_list", required=True, metavar="Q1,Q2,...")
@click.pass_context
def cybe_scan(ctx, m_range: str, n_range: str, q_list: str) -> None:
    """Scan the r-matrix family against the solution predicate."""
    m_lo, m_hi = _parse_range(m_range, "--m")
    n_lo, n_hi = _parse_range(n_range, "--n")
    body = _call(
        ctx,
        "/cybe-scan",
        {
            "m_lo": m_lo,
            "m_hi": m_hi,
            "n_lo": n_lo,
            "n_hi": n_hi,
            "q": _parse_csv(q_list, "--q"),
        },
    )
    for row in body["rows"]:
        click.echo(row["line"])
    if not body["all_agree"]:
        sys.exit(1)


@main.command("dual-bracket")
@click.option(
    "--family",
    required=True,
    type=click.Choice(["T42", "T43", "T44a", "T44b", "T45"]),
)
@click.option("--params", default="", metavar="K=V,...", help="Family parameters.")
@click.option("--i", "i_text", required=True, metavar="SECTOR,DEG")
@click.option("--j", "j_text", required=True, metavar="SECTOR,DEG")
@click.option("--check-oracle", is_flag=True, help="Compare with the pairing oracle.")
@click.option("--window", default=14, show_default=True)
@click.pass_context
def dual_bracket(ctx, family, params, i_text, j_text, check_oracle, window) -> None:
    """Closed-form dual Lie bracket of two dual basis vectors."""
    param_map: dict[str, str] = {}
    if params:
        for piece in _parse_csv(params, "--params"):
            if "=" not in piece:
                raise click.UsageError(f"--params entries must be k=v, got {piece!r}")
            key, value = piece.split("=", 1)
            param_map[key.strip()] = value.strip()
    body = _call(
        ctx,
        "/dual-bracket",
        {
            "family": family,
            "params": param_map,
            "i": i_text,
            "j": j_text,
            "check_oracle": check_oracle,
            "window": window,
        },
    )
    click.echo(body["result"])
    if check_oracle:
        click.echo(f"oracle: {body['oracle']}")
        click.echo(f"agree: {'YES' if body['agree'] else 'NO'}")
        if not body["agree"]:
            sys.exit(1)


@main.command("dual-cobracket")
@click.option("--sector", required=True, type=click.Choice(["V", "W"], case_sensitive=False))
@click.option("--m", "m", required=True, type=int)
@click.option("--window", default=8, show_default=True)
@click.pass_context
def dual_cobracket(ctx, sector: str, m: int, window: int) -> None:
    """Nonzero dual-coalgebra cobracket coefficients of one dual vector."""
    body = _call(
        ctx, "/dual-cobracket", {"sector": sector, "m": m, "window": window}
    )
    for entry in body["entries"]:
        click.echo(entry["line"])


@main.command()
@click.option("--suite", default=None, help="Run a single check by id.")
@click.option("--window", default=4, show_default=True)
@click.option("--q", "q_list", default=None, metavar="Q1,Q2,...", help="q override for the CYBE scan suite.")
@click.pass_context
def verify(ctx, suite: str | None, window: int, q_list: str | None) -> None:
    """Run verification suites; exits 1 unless every check PASSes."""
    payload: dict = {"suite": suite, "window": window}
    if q_list is not None:
        payload["q"] = _parse_csv(q_list, "--q")
    body = _call(ctx, "/verify", payload)
    for report in body["reports"]:
        for line in report["lines"]:
            click.echo(line)
    if not body["all_pass"]:
        sys.exit(1)


@main.command()
@click.option("--coeffs", required=True, metavar="C1,C2,...")
@click.option("--seed", required=True, metavar="N0:F0,F1,...")
@click.option("--eval", "eval_range", required=True, metavar="LO:HI")
@click.pass_context
def recur(ctx, coeffs: str, seed: str, eval_range: str) -> None:
    """Evaluate a two-sided linear recurrence over an index range."""
    if ":" not in seed:
        raise click.UsageError("--seed must be 'n0:f0,f1,...'")
    anchor_text, values_text = seed.split(":", 1)
    try:
        anchor = int(anchor_text)
    except ValueError:
        raise click.UsageError(f"bad seed anchor {anchor_text!r}") from None
    lo, hi = _parse_range(eval_range, "--eval")
    body = _call(
        ctx,
        "/recur",
        {
            "coeffs": _parse_csv(coeffs, "--coeffs"),
            "anchor": anchor,
            "seed": _parse_csv(values_text, "--seed"),
            "lo": lo,
            "hi": hi,
        },
    )
    for value in body["values"]:
        click.echo(value["line"])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    uvicorn.run("hvlie.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
