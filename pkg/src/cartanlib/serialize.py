"""JSON encoding of fields, algebras, subspaces and groups, plus input loading.

Rationals are encoded as "num/den" strings, prime-field elements as
integers, the field spec as {"type":"Q"} or {"type":"GF","p":3}.
"""

from __future__ import annotations

import hashlib
import json
import os

from .algebra import Algebra, Subspace
from .errors import ParseError, UnknownPreset, ValidationError
from .fields import Field, field_from_json, matrix_from_json, matrix_to_json, vector_from_json, vector_to_json
from .groups import GroupTable, group_algebra
from .presets import build_preset


def algebra_to_json(A: Algebra) -> dict:
    return {
        "field": A.field.to_json(),
        "dim": A.dim,
        "one": vector_to_json(A.field, A.one),
        "basis_names": list(A.basis_names),
        "table": [matrix_to_json(A.field, A.table[i]) for i in range(A.dim)],
    }


def algebra_from_json(data: dict) -> Algebra:
    try:
        field = field_from_json(data["field"])
        dim = int(data["dim"])
        table = [
            [[field.scalar_from_json(v) for v in row] for row in plane]
            for plane in data["table"]
        ]
        one = [field.scalar_from_json(v) for v in data["one"]]
        names = data.get("basis_names")
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed algebra JSON: {exc}") from exc
    if len(table) != dim:
        raise ValidationError("table does not match declared dimension")
    return Algebra(field, table, one, names)


def subspace_to_json(S: Subspace) -> dict:
    return {"basis": matrix_to_json(S.field, S.basis)}


def subspace_from_json(A: Algebra, data: dict) -> Subspace:
    try:
        rows = data["basis"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed subspace JSON: {exc}") from exc
    if not rows:
        return A.zero_subspace()
    return Subspace(A, matrix_from_json(A.field, rows))


def canonical_digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def load_algebra_input(path_or_preset: str) -> Algebra:
    """Resolve a CLI positional input: preset token or JSON file path."""
    try:
        return build_preset(path_or_preset)
    except UnknownPreset:
        pass
    if not os.path.exists(path_or_preset):
        raise ParseError(f"no such file and not a preset: {path_or_preset!r}")
    try:
        with open(path_or_preset) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path_or_preset}: {exc}") from exc
    return algebra_from_json(data)


def load_group_input(field: Field, group_preset: str | None, group_file: str | None) -> Algebra:
    """Build KG from --group dihedral:N / cyclic:N or --group-file table.json."""
    from .groups import cyclic, dihedral

    if group_preset is not None:
        token = group_preset.strip().lower()
        if ":" not in token:
            raise ParseError(f"group preset must look like dihedral:N, got {group_preset!r}")
        kind, num = token.split(":", 1)
        try:
            n = int(num)
        except ValueError as exc:
            raise ParseError(f"bad group size in {group_preset!r}") from exc
        if kind == "dihedral":
            return group_algebra(field, dihedral(n))
        if kind == "cyclic":
            return group_algebra(field, cyclic(n))
        raise ParseError(f"unknown group preset kind {kind!r}")
    if group_file is not None:
        try:
            with open(group_file) as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {group_file}: {exc}") from exc
        return group_algebra(field, GroupTable.from_json(data))
    raise ParseError("need --group or --group-file")
