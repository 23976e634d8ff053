"""Exact scalar arithmetic over Q and prime fields GF(p).

Scalars are plain Python values: fractions.Fraction for the rationals
(always in lowest terms with positive denominator, which Fraction
guarantees) and ints in [0, p) for GF(p).  A Field object supplies the
arithmetic, so vectors and matrices can stay dumb numpy arrays -- dtype
object holding Fractions over Q, dtype int64 holding residues over GF(p).
Both field kinds are perfect, so separability questions reduce to
squarefreeness downstream.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable

import numpy as np

from .errors import DivisionByZero, FieldMismatch, ParseError, ValidationError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs and beyond."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the two supported scalar domains."""

    characteristic: int
    dtype: Any

    def coerce(self, value) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    # -- array helpers ------------------------------------------------

    def array(self, data) -> np.ndarray:
        """Build a reduced ndarray of scalars from nested lists/arrays."""
        arr = np.array(self._deep_coerce(data), dtype=self.dtype)
        return self.reduce(arr)

    def _deep_coerce(self, data):
        if isinstance(data, np.ndarray):
            data = data.tolist()
        if isinstance(data, (list, tuple)):
            return [self._deep_coerce(x) for x in data]
        return self.coerce(data)

    def zeros(self, *shape: int) -> np.ndarray:
        raise NotImplementedError

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Renormalize every entry after a numpy arithmetic op."""
        raise NotImplementedError

    def scalar_to_json(self, a):
        raise NotImplementedError

    def scalar_from_json(self, v):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatch(f"field mismatch: {self} vs {other}")


class Rationals(Field):
    """The field Q with arbitrary-precision Fraction scalars."""

    characteristic = 0
    dtype = object

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, np.integer)):
            return Fraction(int(value))
        if isinstance(value, str):
            return Fraction(value)
        raise ValidationError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def zeros(self, *shape: int) -> np.ndarray:
        arr = np.empty(shape, dtype=object)
        arr[...] = Fraction(0)
        return arr

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def scalar_to_json(self, a) -> str:
        return f"{a.numerator}/{a.denominator}"

    def scalar_from_json(self, v) -> Fraction:
        if isinstance(v, str):
            return Fraction(v)
        if isinstance(v, (int, float)):
            if isinstance(v, float) and not v.is_integer():
                raise ParseError(f"non-exact rational literal {v!r}")
            return Fraction(int(v))
        raise ParseError(f"cannot parse rational from {v!r}")

    def to_json(self) -> dict:
        return {"type": "Q"}

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "Q"


class PrimeField(Field):
    """GF(p) with int residues in [0, p)."""

    dtype = np.int64

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        self.p = int(p)
        self.characteristic = self.p

    def coerce(self, value) -> int:
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator % self.p
        raise ValidationError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise DivisionByZero("division by zero")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def zeros(self, *shape: int) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p

    def scalar_to_json(self, a) -> int:
        return int(a)

    def scalar_from_json(self, v) -> int:
        if isinstance(v, (int, float)) and float(v).is_integer():
            return int(v) % self.p
        raise ParseError(f"cannot parse GF({self.p}) element from {v!r}")

    def to_json(self) -> dict:
        return {"type": "GF", "p": self.p}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


QQ = Rationals()


def field_from_json(spec: dict) -> Field:
    """Decode {"type":"Q"} or {"type":"GF","p":3}."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ParseError(f"bad field spec {spec!r}")
    if spec["type"] == "Q":
        return QQ
    if spec["type"] == "GF":
        if "p" not in spec:
            raise ParseError("GF field spec needs p")
        return PrimeField(int(spec["p"]))
    raise ParseError(f"unknown field type {spec['type']!r}")


def parse_field(token: str) -> Field:
    """Parse the CLI field grammars: "Q", "GF:3" or "GF(3)"."""
    token = token.strip()
    if token in ("Q", "QQ"):
        return QQ
    for prefix, suffix in (("GF:", ""), ("GF(", ")")):
        if token.startswith(prefix) and token.endswith(suffix) and len(token) > len(prefix) + len(suffix):
            body = token[len(prefix):len(token) - len(suffix) or None]
            try:
                return PrimeField(int(body))
            except ValueError:
                break
    raise ParseError(f"cannot parse field token {token!r}")


def vector_to_json(field: Field, vec: np.ndarray) -> list:
    return [field.scalar_to_json(x) for x in vec]


def vector_from_json(field: Field, data: Iterable) -> np.ndarray:
    return field.array([field.scalar_from_json(x) for x in data])


def matrix_to_json(field: Field, mat: np.ndarray) -> list:
    return [vector_to_json(field, row) for row in mat]


def matrix_from_json(field: Field, data: Iterable) -> np.ndarray:
    rows = [[field.scalar_from_json(x) for x in row] for row in data]
    return field.array(rows)
