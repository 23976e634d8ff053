"""Built-in algebra constructors and the preset grammar used by the CLI/service.

Presets: dihedral:N@FIELD, cyclic:N@FIELD, matrix:N@FIELD, quaternion:Q,
dual-numbers:FIELD, where FIELD is Q, GF:p or GF(p).
"""

from __future__ import annotations

import numpy as np

from .algebra import Algebra
from .errors import UnknownPreset, ValidationError
from .fields import Field, QQ, parse_field
from .groups import cyclic, dihedral, group_algebra
from .polynomials import Polynomial


def matrix_algebra(field: Field, n: int) -> Algebra:
    """M_n(K) on the matrix-unit basis E_rc (row-major)."""
    if n < 1:
        raise ValidationError("matrix algebra needs n >= 1")
    d = n * n
    table = field.zeros(d, d, d)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        table[a * n + b, c * n + e, a * n + e] = field.one
    one = field.zeros(d)
    for a in range(n):
        one[a * n + a] = field.one
    names = tuple(f"E{a + 1}{b + 1}" for a in range(n) for b in range(n))
    return Algebra(field, table, one, names)


def quaternion_algebra() -> Algebra:
    """The rational quaternions (-1,-1 / Q): i^2 = j^2 = -1, ij = k = -ji."""
    one, i, j, k = range(4)
    table = QQ.zeros(4, 4, 4)
    plus, minus = QQ.one, QQ.neg(QQ.one)
    rules = {
        (one, one): (one, plus), (one, i): (i, plus), (one, j): (j, plus), (one, k): (k, plus),
        (i, one): (i, plus), (i, i): (one, minus), (i, j): (k, plus), (i, k): (j, minus),
        (j, one): (j, plus), (j, i): (k, minus), (j, j): (one, minus), (j, k): (i, plus),
        (k, one): (k, plus), (k, i): (j, plus), (k, j): (i, minus), (k, k): (one, minus),
    }
    for (a, b), (c, sign) in rules.items():
        table[a, b, c] = sign
    ident = QQ.zeros(4)
    ident[one] = QQ.one
    return Algebra(QQ, table, ident, ("1", "i", "j", "k"))


def dual_numbers(field: Field) -> Algebra:
    """K[x]/(x^2)."""
    table = field.zeros(2, 2, 2)
    table[0, 0, 0] = field.one
    table[0, 1, 1] = field.one
    table[1, 0, 1] = field.one
    one = field.zeros(2)
    one[0] = field.one
    return Algebra(field, table, one, ("1", "x"))


def polynomial_quotient_algebra(field: Field, f: Polynomial) -> Algebra:
    """K[x]/(f) for monic f of degree >= 1, on the basis 1, x, ..., x^(deg-1)."""
    if f.is_zero() or f.degree < 1:
        raise ValidationError("quotient modulus must have degree >= 1")
    if not field.is_zero(field.sub(f.leading(), field.one)):
        f = f.monic()
    d = f.degree
    # reduced powers x^m for m up to 2d-2
    powers = []
    cur = [field.zero] * d
    cur[0] = field.one
    for m in range(2 * d - 1):
        powers.append(list(cur))
        # multiply by x, reduce by f
        nxt = [field.zero] + cur[:-1] if d > 1 else [field.zero]
        overflow = cur[-1]
        if d > 1:
            nxt = nxt[:d]
        if not field.is_zero(overflow):
            for t in range(d):
                nxt[t] = field.sub(nxt[t], field.mul(overflow, f.coeffs[t]))
        cur = nxt
    table = field.zeros(d, d, d)
    for i in range(d):
        for j in range(d):
            table[i, j] = field.array(powers[i + j])
    one = field.zeros(d)
    one[0] = field.one
    names = tuple("1" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(d))
    return Algebra(field, table, one, names)


def build_preset(token: str) -> Algebra:
    """Decode a preset token like "matrix:2@GF(3)" into an algebra."""
    token = token.strip()
    if ":" not in token:
        raise UnknownPreset(f"not a preset: {token!r}")
    kind, rest = token.split(":", 1)
    kind = kind.lower()
    if kind == "quaternion":
        if rest not in ("Q", "QQ"):
            raise UnknownPreset("quaternion preset is only defined over Q")
        return quaternion_algebra()
    if kind == "dual-numbers":
        return dual_numbers(parse_field(rest))
    if kind in ("dihedral", "cyclic", "matrix"):
        if "@" not in rest:
            raise UnknownPreset(f"preset {token!r} needs N@FIELD")
        num, field_token = rest.split("@", 1)
        try:
            n = int(num)
        except ValueError as exc:
            raise UnknownPreset(f"bad size in preset {token!r}") from exc
        field = parse_field(field_token)
        if kind == "dihedral":
            return group_algebra(field, dihedral(n))
        if kind == "cyclic":
            return group_algebra(field, cyclic(n))
        return matrix_algebra(field, n)
    raise UnknownPreset(f"unknown preset kind {kind!r}")
