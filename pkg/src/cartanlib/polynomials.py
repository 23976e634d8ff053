"""Univariate polynomial arithmetic over the base field.

Coefficients are stored lowest degree first with trailing zeros
stripped.  No factorization into irreducibles is ever needed: over the
perfect fields supported here, separability of an element reduces to
squarefreeness of its minimal polynomial, i.e. gcd(f, f') == 1.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import Algebra
from .errors import ZeroPolynomial
from .fields import Field


class Polynomial:
    """Dense univariate polynomial; coeffs[i] is the coefficient of t^i."""

    def __init__(self, field: Field, coeffs):
        self.field = field
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.field.inv(self.leading())
        return Polynomial(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self.field.check_same(other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [self.field.zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [self.field.zero] * (n - len(other.coeffs))
        return Polynomial(self.field, [self.field.add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.field, [self.field.mul(x, c) for x in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self.field.check_same(other.field)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field, [])
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = self.field.add(out[i + j], self.field.mul(a, b))
        return Polynomial(self.field, out)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self.field.check_same(other.field)
        if other.is_zero():
            raise ZeroPolynomial("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        q = [f.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.leading()
        while len(rem) >= len(other.coeffs) and rem:
            factor = f.div(rem[-1], dlead)
            shift = len(rem) - len(other.coeffs)
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, c))
            while rem and f.is_zero(rem[-1]):
                rem.pop()
        return Polynomial(f, q), Polynomial(f, rem)

    def derivative(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, [f.mul(f.coerce(i), c) for i, c in enumerate(self.coeffs)][1:])

    def evaluate_in(self, A: Algebra, x: np.ndarray) -> np.ndarray:
        """Horner evaluation of the polynomial at an algebra element."""
        acc = A.zero()
        for c in reversed(self.coeffs):
            acc = A.field.reduce(A.multiply(acc, x) + np.asarray(c * A.one, dtype=A.one.dtype))
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)]
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) == 0."""
    f.field.check_same(g.field)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def is_squarefree(f: Polynomial) -> bool:
    """True iff gcd(f, f') == 1; over perfect fields this is separability."""
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial is undefined")
    g = poly_gcd(f, f.derivative())
    return g.degree == 0


def minimal_polynomial(A: Algebra, x: np.ndarray) -> Polynomial:
    """Least-degree monic m with m(x) == 0, from the first Krylov dependence.

    Powers 1, x, x^2, ... are row-reduced incrementally; the coefficients
    of the first linear dependence are tracked through the elimination.
    """
    A._check_dim(x)
    f = A.field
    rows: list[tuple[np.ndarray, int, list]] = []  # (reduced vector, pivot col, combo)
    power = A.one.copy()
    m = 0
    while True:
        vec = power.copy()
        combo = [f.zero] * m + [f.one]
        for rvec, piv, rcombo in rows:
            c = vec[piv]
            if not f.is_zero(c):
                vec = f.reduce(vec - c * rvec)
                combo = _combo_sub(f, combo, c, rcombo)
        piv = _first_nonzero(f, vec)
        if piv is None:
            return Polynomial(f, combo)
        inv = f.inv(vec[piv])
        vec = f.reduce(vec * inv)
        combo = [f.mul(c, inv) for c in combo]
        rows.append((vec, piv, combo))
        power = A.multiply(power, x)
        m += 1


def _combo_sub(field: Field, combo: list, c, rcombo: list) -> list:
    out = list(combo)
    for i, rc in enumerate(rcombo):
        out[i] = field.sub(out[i], field.mul(c, rc))
    return out


def _first_nonzero(field: Field, vec: np.ndarray):
    for i, v in enumerate(vec):
        if not field.is_zero(v):
            return i
    return None
