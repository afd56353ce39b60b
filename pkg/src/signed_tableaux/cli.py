"""
Thin command-line client for the signed-tableaux service.

Every subcommand except `serve` serializes its arguments into the same
request models the HTTP API uses and sends them through httpx, against
an in-process ASGI transport by default, or a running server when
--server is given.  Exit status: 0 success, 1 verification failure,
2 usage error.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx


def _send(server: str | None, method: str, path: str, **kwargs) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=120.0) as client:
            return client.request(method, path, **kwargs)

    import asyncio

    from .service import create_app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=120.0
        ) as client:
            return await client.request(method, path, **kwargs)

    return asyncio.run(go())


def _request(ctx, method: str, path: str, **kwargs) -> httpx.Response:
    try:
        response = _send(ctx.obj.get("server"), method, path, **kwargs)
    except httpx.HTTPError as exc:
        raise click.ClickException(f"service unreachable: {exc}")
    if response.status_code == 422:
        detail = response.json().get("detail", response.text)
        raise click.UsageError(str(detail))
    if response.status_code >= 400:
        raise click.ClickException(f"{response.status_code}: {response.text}")
    return response


def _object_payload(text: str, n: int | None) -> dict:
    """Turn CLI input into a perm/tableau payload fragment.

    Accepts window text ("-2,-4,5,3,1"), cycle text ("(2,-3,-1,4)"),
    inline tableau JSON, or @path to a JSON file.
    """
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    text = text.strip()
    if text.startswith("{"):
        try:
            return {"tableau": json.loads(text)}
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"bad tableau JSON: {exc}")
    if text.startswith("("):
        if n is None:
            raise click.UsageError("cycle input needs --n")
        return {"perm": {"n": n, "cycles": text}}
    rank = n if n is not None else len([t for t in text.split(",") if t.strip()])
    return {"perm": {"n": rank, "window": text}}


def _emit(document: str, out: str | None) -> None:
    if out:
        Path(out).write_text(document + "\n")
    else:
        click.echo(document)


@click.group()
@click.option("--server", default=None, metavar="URL", help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx, server):
    """Signed permutations, their tableaux, and the weak order."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("theorem")
@click.option("--n", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def verify(ctx, theorem, n, fmt):
    """Exhaustively check a named identity at rank N."""
    report = _request(
        ctx, "POST", "/verify", json={"theorem": theorem, "n": n}
    ).json()
    if fmt == "json":
        click.echo(json.dumps(report, indent=2))
    else:
        status = "PASS" if report["passed"] else "FAIL"
        click.echo(
            f"{report['theorem']} n={report['n']}: {report['instances']} instances, "
            f"{len(report['failures'])} failures [{status}] "
            f"({report['elapsed']:.2f}s)"
        )
        for failure in report["failures"]:
            click.echo("counterexample: " + json.dumps(failure))
    if not report["passed"]:
        sys.exit(1)


@main.command(name="map", context_settings={"ignore_unknown_options": True})
@click.argument("direction", type=click.Choice(
    ["pt-to-perm", "perm-to-pt", "bt-to-perm", "perm-to-bt", "pt-to-bt", "bt-to-pt"]
))
@click.argument("source")
@click.option("--n", type=int, default=None, help="Rank, needed for cycle input.")
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def map_cmd(ctx, direction, source, n, out):
    """Apply a zigzag map or kind conversion to SOURCE."""
    payload = {"direction": direction, **_object_payload(source, n)}
    body = _request(ctx, "POST", "/map", json=payload).json()
    if body.get("perm") is not None:
        _emit(body["perm"], out)
    else:
        _emit(json.dumps(body["tableau"], indent=2), out)


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("source")
@click.option("--n", type=int, default=None)
@click.option("--trace", type=int, default=None, metavar="LABEL",
              help="Also dump the walk from this row or column label.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def stats(ctx, source, n, trace, fmt):
    """All statistics of one permutation or tableau."""
    payload = _object_payload(source, n)
    if trace is not None:
        payload["trace_from"] = trace
    body = _request(ctx, "POST", "/stats", json=payload).json()
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
        return
    ps = body["perm_stats"]
    click.echo(f"window: {ps['window']}")
    click.echo(
        "wex={wex} drop={drop} neg={neg} cyc={cyc} fwex={fwex}".format(**ps)
    )
    click.echo(f"nest={ps['alignments_nest']} EN={ps['alignments_en']} NE={ps['alignments_ne']}")
    click.echo(f"crossings={ps['crossings']}")
    click.echo(f"al={ps['al']} crs={ps['crs']} inv={ps['inv']}")
    if body.get("tableau_stats"):
        ts = body["tableau_stats"]
        click.echo(
            "tableau: one={one} two={two} so={so} dess={dess} row={row} "
            "zerorow={zerorow} col={col} diag={diag}".format(**ts)
        )
    if body.get("zero_types"):
        click.echo(
            "zeros: EE={zero_EE} NN={zero_NN} EN={zero_EN} nontyped={nontyped}".format(
                **body["zero_types"]
            )
        )
    if body.get("trace"):
        click.echo(body["trace"])


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--kind", type=click.Choice(["permutation", "bare", "group"]),
              default="permutation")
@click.option("--limit", type=int, default=None,
              help="Print at most this many objects (count is always full).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def enumerate(ctx, n, kind, limit, fmt):
    """Stream all tableaux of a kind, or all group elements."""
    params = {"n": n, "kind": kind}
    if limit is not None:
        params["limit"] = limit
    body = _request(ctx, "GET", "/enumerate", params=params).json()
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
        return
    for item in body["items"]:
        click.echo(item["window"] if "window" in item else json.dumps(item))
    click.echo(f"count: {body['count']}")


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot")
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def poset(ctx, n, fmt, out):
    """Write the full weak-order Hasse diagram."""
    response = _request(ctx, "GET", "/poset", params={"n": n, "fmt": fmt})
    _emit(response.text.rstrip("\n"), out)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service with uvicorn."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
