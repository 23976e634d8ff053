"""FastAPI service wrapping the core package.

One POST endpoint per command; requests carry either an inline algebra,
a preset token, or a group (preset or Cayley table) plus a field token.
Errors map onto HTTP statuses and carry the CLI exit code.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from . import __version__
from .algebra import Algebra
from .errors import (
    CartanlibError,
    ParseError,
    PreconditionError,
    TooLarge,
    ValidationError,
    VerificationFailed,
)
from .fields import parse_field
from .groups import GroupTable, group_algebra
from .reports import COMMANDS, build_report, run_verify
from .serialize import algebra_from_json, build_preset, subspace_from_json


class FieldModel(BaseModel):
    type: Literal["Q", "GF"]
    p: int | None = None


class AlgebraModel(BaseModel):
    field: FieldModel
    dim: int
    table: list
    one: list
    basis_names: list[str] | None = None


class GroupModel(BaseModel):
    order: int
    mul: list[list[int]]
    identity: int
    names: list[str] | None = None


class AlgebraInput(BaseModel):
    """Exactly one of: algebra, preset, group_preset/group (with field)."""

    algebra: AlgebraModel | None = None
    preset: str | None = None
    group_preset: str | None = None
    group: GroupModel | None = None
    field: str | None = Field(default=None, description="field token (Q, GF:p) for group inputs")

    @model_validator(mode="after")
    def _one_source(self):
        sources = [self.algebra, self.preset, self.group_preset, self.group]
        if sum(s is not None for s in sources) != 1:
            raise ValueError("provide exactly one of algebra / preset / group_preset / group")
        if (self.group_preset is not None or self.group is not None) and self.field is None:
            raise ValueError("group inputs need a field token")
        return self


class ComputeRequest(BaseModel):
    input: AlgebraInput
    seed: int = 0
    oracle: bool = False


class SubspaceModel(BaseModel):
    basis: list


class VerifyRequest(ComputeRequest):
    subspace: SubspaceModel


class CheckModel(BaseModel):
    name: str
    passed: bool


class RunReport(BaseModel):
    input_digest: str
    command: str
    results: dict
    checks: list[CheckModel]
    seed: int
    version: str


def resolve_algebra(inp: AlgebraInput) -> Algebra:
    if inp.algebra is not None:
        return algebra_from_json(inp.algebra.model_dump())
    if inp.preset is not None:
        return build_preset(inp.preset)
    field = parse_field(inp.field)
    if inp.group is not None:
        return group_algebra(field, GroupTable.from_json(inp.group.model_dump()))
    token = inp.group_preset.strip().lower()
    if ":" not in token:
        raise ParseError(f"group preset must look like dihedral:N, got {inp.group_preset!r}")
    kind, num = token.split(":", 1)
    try:
        n = int(num)
    except ValueError as exc:
        raise ParseError(f"bad group size in {inp.group_preset!r}") from exc
    from .groups import cyclic, dihedral

    if kind == "dihedral":
        return group_algebra(field, dihedral(n))
    if kind == "cyclic":
        return group_algebra(field, cyclic(n))
    raise ParseError(f"unknown group preset kind {kind!r}")


app = FastAPI(title="cartanlib", version=__version__)

_STATUS_BY_ERROR = (
    (ParseError, 400),
    (ValidationError, 422),
    (PreconditionError, 409),
    (TooLarge, 413),
    (VerificationFailed, 500),
)


@app.exception_handler(CartanlibError)
async def _cartanlib_error_handler(request: Request, exc: CartanlibError):
    status = 500
    for klass, code in _STATUS_BY_ERROR:
        if isinstance(exc, klass):
            status = code
            break
    return JSONResponse(
        status_code=status,
        content={
            "error": type(exc).__name__,
            "message": str(exc),
            "exit_code": exc.exit_code,
        },
    )


@app.get("/health")
async def health():
    return {"status": "ok", "version": __version__}


def _make_endpoint(command: str):
    runner = COMMANDS[command]

    async def endpoint(req: ComputeRequest) -> RunReport:
        A = resolve_algebra(req.input)
        results, checks = runner(A, seed=req.seed, oracle=req.oracle)
        return RunReport(**build_report(command, A, results, checks, req.seed))

    endpoint.__name__ = f"run_{command.replace('-', '_')}"
    return endpoint


for _command in COMMANDS:
    app.post(f"/{_command}", response_model=RunReport)(_make_endpoint(_command))


@app.post("/verify", response_model=RunReport)
async def verify_endpoint(req: VerifyRequest) -> RunReport:
    A = resolve_algebra(req.input)
    C = subspace_from_json(A, req.subspace.model_dump())
    results, checks = run_verify(A, C, seed=req.seed, oracle=req.oracle)
    from .serialize import subspace_to_json

    extra = {"subspace": subspace_to_json(C)}
    return RunReport(**build_report("verify", A, results, checks, req.seed, extra_digest=extra))
