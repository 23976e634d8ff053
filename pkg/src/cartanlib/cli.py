"""Thin command-line client for the cartanlib service.

Every subcommand posts to the FastAPI app, by default over an in-process
ASGI transport (no server needed); pass --server URL to target a running
instance.  Exit codes: 0 ok, 2 parse, 3 validation, 4 precondition,
5 verification failed (or any false check in the report), 6 too large.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from . import __version__
from .errors import CartanlibError, ParseError

_EXIT_BY_ERROR = {
    "ParseError": 2,
    "UnknownPreset": 2,
    "ValidationError": 3,
    "FieldMismatch": 3,
    "DimensionMismatch": 3,
    "PreconditionError": 4,
    "DivisionByZero": 4,
    "ZeroPolynomial": 4,
    "NotLieClosed": 4,
    "NotIdeal": 4,
    "NotSubgroup": 4,
    "NotInRadical": 4,
    "NotTorus": 4,
    "NotCentralSimple": 4,
    "NotFiniteField": 4,
    "InvalidOrder": 4,
    "InvalidN": 4,
    "VerificationFailed": 5,
    "TooLarge": 6,
    "EnumerationTooLarge": 6,
}


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            return client.post(path, json=payload)

    import asyncio

    from .service import app

    async def _go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://cartanlib.local", timeout=None) as client:
            return await client.post(path, json=payload)

    return asyncio.run(_go())


def _build_input(input_arg, group, group_file, field) -> dict:
    if group or group_file:
        if field is None:
            raise ParseError("group inputs need --field")
        if group:
            return {"group_preset": group, "field": field}
        with open(group_file) as fh:
            try:
                table = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON in {group_file}: {exc}") from exc
        return {"group": table, "field": field}
    if input_arg is None:
        raise ParseError("missing algebra input (positional preset/file, or --group)")
    import os

    if os.path.exists(input_arg):
        with open(input_arg) as fh:
            try:
                return {"algebra": json.load(fh)}
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON in {input_arg}: {exc}") from exc
    return {"preset": input_arg}


def _emit(report: dict, as_json: bool, out: str | None) -> int:
    if as_json:
        text = json.dumps(report, indent=None, sort_keys=True)
    else:
        text = _pretty(report)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    click.echo(text)
    failed = [c for c in report.get("checks", []) if not c["passed"]]
    return 5 if failed else 0


def _pretty(report: dict) -> str:
    lines = [f"command: {report['command']}   seed: {report['seed']}   digest: {report['input_digest'][:12]}"]
    for key, val in report["results"].items():
        if isinstance(val, dict) and "dim" in val:
            lines.append(f"  {key}: dim {val['dim']}" + (f", class {val['class']}" if "class" in val else ""))
        elif isinstance(val, (bool, int, str)) or val is None:
            lines.append(f"  {key}: {val}")
        else:
            lines.append(f"  {key}: {json.dumps(val)}")
    for check in report["checks"]:
        mark = "ok" if check["passed"] else "FAIL"
        lines.append(f"  [{mark}] {check['name']}")
    return "\n".join(lines)


def _run(ctx, command: str, payload: dict) -> None:
    opts = ctx.obj
    try:
        resp = _post(opts["server"], f"/{command}", payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(1)
    body = resp.json()
    if resp.status_code != 200:
        if "error" in body:
            click.echo(f"error: {body['error']}: {body['message']}", err=True)
            sys.exit(body.get("exit_code", _EXIT_BY_ERROR.get(body["error"], 1)))
        click.echo(f"error: service returned {resp.status_code}: {body}", err=True)
        sys.exit(3 if resp.status_code == 422 else 1)
    sys.exit(_emit(body, opts["json"], opts["out"]))


def _common_options(fn):
    fn = click.option("--server", default=None, help="URL of a running cartanlib service")(fn)
    fn = click.option("--field", default=None, help="field token (Q, GF:p) for --group inputs")(fn)
    fn = click.option("--group", default=None, help="group preset dihedral:N or cyclic:N")(fn)
    fn = click.option("--group-file", default=None, type=click.Path(), help="Cayley table JSON file")(fn)
    fn = click.option("--seed", default=0, show_default=True, help="seed for randomized search stages")(fn)
    fn = click.option("--oracle", is_flag=True, help="enable brute-force cross-checks (small instances)")(fn)
    fn = click.option("--json", "as_json", is_flag=True, help="emit exactly one JSON document")(fn)
    fn = click.option("--pretty", is_flag=True, help="human-readable summary (default)")(fn)
    fn = click.option("--out", default=None, type=click.Path(), help="also write the output to FILE")(fn)
    fn = click.argument("input_arg", metavar="[ALGEBRA]", required=False)(fn)
    return fn


@click.group()
@click.version_option(version=__version__)
@click.pass_context
def main(ctx):
    """Exact Cartan subalgebras of associated Lie algebras over Q and GF(p)."""
    ctx.ensure_object(dict)


def _register(command: str):
    @main.command(name=command)
    @_common_options
    @click.pass_context
    def _cmd(ctx, input_arg, server, field, group, group_file, seed, oracle, as_json, pretty, out):
        ctx.obj.update({"server": server, "json": as_json and not pretty, "out": out})
        try:
            payload = {
                "input": _build_input(input_arg, group, group_file, field),
                "seed": seed,
                "oracle": oracle,
            }
        except CartanlibError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(exc.exit_code)
        _run(ctx, command, payload)

    _cmd.__name__ = f"cmd_{command.replace('-', '_')}"
    return _cmd


for _name in ("radical", "complement", "soluble", "reduced", "maximal-torus", "cartan", "index", "units", "report"):
    _register(_name)


@main.command(name="verify")
@_common_options
@click.option("--subspace", "subspace_file", required=True, type=click.Path(exists=True), help="subspace JSON file {\"basis\": [[...]]}")
@click.pass_context
def verify_cmd(ctx, input_arg, server, field, group, group_file, seed, oracle, as_json, pretty, out, subspace_file):
    """Check the Cartan property of a given subspace directly."""
    ctx.obj.update({"server": server, "json": as_json and not pretty, "out": out})
    try:
        payload = {
            "input": _build_input(input_arg, group, group_file, field),
            "seed": seed,
            "oracle": oracle,
        }
        with open(subspace_file) as fh:
            payload["subspace"] = json.load(fh)
    except json.JSONDecodeError as exc:
        click.echo(f"error: ParseError: invalid subspace JSON: {exc}", err=True)
        sys.exit(2)
    except CartanlibError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(exc.exit_code)
    _run(ctx, "verify", payload)


@main.command(name="serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve_cmd(host, port):
    """Run the cartanlib FastAPI service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
