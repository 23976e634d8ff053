"""Structure-constant algebras and the subspace operations everything rests on.

An Algebra is a dim x dim x dim tensor over an exact Field:
e_i * e_j = sum_k table[i,j,k] e_k.  Elements are plain coordinate row
vectors (numpy arrays).  Subspaces are canonicalized by reduced row
echelon form, so subspace equality is matrix equality.

Conventions: vectors are rows; for an element a, right_mul_matrix(a)
satisfies v @ right_mul_matrix(a) == v*a, and ad(h) acts on the right,
v @ ad(h) == v*h - h*v, matching the operator notation used throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    FieldMismatch,
    NotIdeal,
    NotLieClosed,
    ValidationError,
)
from .fields import Field, PrimeField


class Algebra:
    """A finite-dimensional associative unital algebra given by structure constants.

    Associativity and the two-sided identity law are verified on
    construction; instances are immutable after that.
    """

    def __init__(self, field: Field, table, one, basis_names=None):
        self.field = field
        self.table = field.array(table)
        if self.table.ndim != 3 or len(set(self.table.shape)) != 1:
            raise ValidationError("structure table must be a cubic dim^3 tensor")
        self.dim = self.table.shape[0]
        self.one = field.array(one)
        if self.one.shape != (self.dim,):
            raise ValidationError("identity coordinate vector has wrong length")
        if basis_names is None:
            basis_names = tuple(f"e{i}" for i in range(self.dim))
        self.basis_names = tuple(str(n) for n in basis_names)
        if len(self.basis_names) != self.dim:
            raise ValidationError("need one basis name per basis vector")
        self._check_associative()
        self._check_identity()

    # -- construction checks -------------------------------------------

    def _check_associative(self) -> None:
        t = self.table
        if self.field.dtype is np.int64:
            left = self.field.reduce(np.einsum("ijm,mkl->ijkl", t, t))
            right = self.field.reduce(np.einsum("jkm,iml->ijkl", t, t))
        else:
            left = np.tensordot(t, t, axes=([2], [0]))
            right = np.tensordot(t, t, axes=([2], [1])).transpose(2, 0, 1, 3)
        if not np.array_equal(left, right):
            raise ValidationError("structure table is not associative")

    def _check_identity(self) -> None:
        ident = linalg.eye(self.field, self.dim)
        if not np.array_equal(self.left_mul_matrix(self.one), ident) or not np.array_equal(
            self.right_mul_matrix(self.one), ident
        ):
            raise ValidationError("designated identity is not a two-sided identity")

    # -- elements -------------------------------------------------------

    def element(self, coords) -> np.ndarray:
        vec = self.field.array(coords)
        if vec.shape != (self.dim,):
            raise DimensionMismatch(f"element needs {self.dim} coordinates")
        return vec

    def basis_vector(self, i: int) -> np.ndarray:
        vec = self.field.zeros(self.dim)
        vec[i] = self.field.one
        return vec

    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        self._check_dim(x, y)
        return self.field.reduce(np.dot(x, self.right_mul_matrix(y)))

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """The Lie product xy - yx of the associated Lie algebra."""
        return self.field.reduce(self.multiply(x, y) - self.multiply(y, x))

    def power(self, x: np.ndarray, n: int) -> np.ndarray:
        result = self.one.copy()
        for _ in range(n):
            result = self.multiply(result, x)
        return result

    def left_mul_matrix(self, a: np.ndarray) -> np.ndarray:
        """Matrix L with v @ L == a*v."""
        return self.field.reduce(np.tensordot(a, self.table, axes=([0], [0])))

    def right_mul_matrix(self, a: np.ndarray) -> np.ndarray:
        """Matrix R with v @ R == v*a."""
        return self.field.reduce(np.tensordot(a, self.table, axes=([0], [1])))

    def ad_matrix(self, l: np.ndarray) -> np.ndarray:
        """Adjoint action of l as a matrix acting on the right: v @ ad == v*l - l*v."""
        self._check_dim(l)
        return self.field.reduce(self.right_mul_matrix(l) - self.left_mul_matrix(l))

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    def is_invertible(self, x: np.ndarray) -> bool:
        return linalg.rank(self.field, self.left_mul_matrix(x)) == self.dim

    def inverse(self, x: np.ndarray) -> np.ndarray:
        """Two-sided inverse; raises ValueError if x is not a unit."""
        lm = self.left_mul_matrix(x)
        # solve y @ lm^T ... we need y with x*y = 1: one = y @ lm
        sol = _solve_row(self.field, lm, self.one)
        if sol is None:
            raise ValueError("element is not invertible")
        return sol

    def _check_dim(self, *vecs: np.ndarray) -> None:
        for v in vecs:
            if v.shape != (self.dim,):
                raise DimensionMismatch("coordinate vector has wrong length")

    # -- subspaces -------------------------------------------------------

    def span(self, rows) -> "Subspace":
        if isinstance(rows, np.ndarray) and rows.ndim == 1:
            rows = [rows]
        rows = list(rows)
        if not rows:
            return Subspace(self, self.field.zeros(0, self.dim))
        return Subspace(self, np.array([self.element(r) if not isinstance(r, np.ndarray) else r for r in rows]))

    def full_space(self) -> "Subspace":
        return Subspace(self, linalg.eye(self.field, self.dim))

    def zero_subspace(self) -> "Subspace":
        return Subspace(self, self.field.zeros(0, self.dim))

    def elements(self, bound: int = 1 << 16):
        """Iterate every element; only available over prime fields, up to `bound`."""
        if not isinstance(self.field, PrimeField):
            raise EnumerationTooLarge("cannot enumerate elements over an infinite field")
        total = self.field.p ** self.dim
        if total > bound:
            raise EnumerationTooLarge(f"|A| = {total} exceeds enumeration bound {bound}")
        for coords in itertools.product(range(self.field.p), repeat=self.dim):
            yield np.array(coords, dtype=np.int64)

    def __repr__(self) -> str:
        return f"Algebra(dim={self.dim}, field={self.field})"


def _solve_row(field: Field, mat: np.ndarray, target: np.ndarray):
    """Solve y @ mat == target; None if inconsistent."""
    aug = np.concatenate([mat.T, target.reshape(-1, 1)], axis=1)
    red, pivots = linalg.rref(field, aug)
    n = mat.shape[0]
    sol = field.zeros(n)
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        sol[pc] = red[i, n]
    # mat.T @ sol == target by construction only when consistent
    if np.any(field.reduce(np.dot(mat.T, sol) - target) != field.zero):
        return None
    return sol


class Subspace:
    """A subspace of a fixed ambient algebra, canonicalized by RREF."""

    def __init__(self, algebra: Algebra, rows: np.ndarray):
        self.algebra = algebra
        if rows.size == 0:
            self.basis = algebra.field.zeros(0, algebra.dim)
            self.pivots: tuple[int, ...] = ()
        else:
            if rows.ndim != 2 or rows.shape[1] != algebra.dim:
                raise DimensionMismatch("subspace rows must have ambient dimension")
            self.basis, self.pivots = linalg.rref(algebra.field, rows)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def field(self) -> Field:
        return self.algebra.field

    def contains(self, vec: np.ndarray) -> bool:
        return linalg.in_row_space(self.field, self.basis, self.pivots, vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def coordinates(self, vec: np.ndarray) -> np.ndarray:
        return linalg.coordinates(self.field, self.basis, self.pivots, vec)

    def residual_projector(self) -> np.ndarray:
        """Matrix R with v @ R == 0 iff v lies in this subspace."""
        d = self.algebra.dim
        s = self.field.zeros(d, d)
        for i, pc in enumerate(self.pivots):
            s[pc] = self.basis[i]
        return self.field.reduce(linalg.eye(self.field, d) - s)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        rows = np.concatenate([self.basis, other.basis], axis=0)
        return Subspace(self.algebra, rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return self.algebra.zero_subspace()
        stacked = np.concatenate([self.basis, other.basis], axis=0)
        ker = linalg.left_kernel(self.field, stacked)
        rows = ker[:, : self.dim]
        vecs = self.field.reduce(np.dot(rows, self.basis)) if rows.size else self.field.zeros(0, self.algebra.dim)
        return Subspace(self.algebra, vecs)

    def elements(self, bound: int = 1 << 16):
        """All elements of the subspace; prime fields only."""
        if not isinstance(self.field, PrimeField):
            raise EnumerationTooLarge("cannot enumerate over an infinite field")
        p = self.field.p
        if p ** self.dim > bound:
            raise EnumerationTooLarge("subspace too large to enumerate")
        for coeffs in itertools.product(range(p), repeat=self.dim):
            if self.dim == 0:
                yield self.algebra.zero()
            else:
                yield self.field.reduce(np.dot(np.array(coeffs, dtype=np.int64), self.basis))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.algebra.dim == other.algebra.dim
            and self.dim == other.dim
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.basis.tobytes() if self.field.dtype is np.int64 else str(self.basis)))

    def _check_compatible(self, other: "Subspace") -> None:
        if self.algebra.dim != other.algebra.dim:
            raise DimensionMismatch("subspaces live in different ambient spaces")
        self.field.check_same(other.field)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in {self.algebra!r})"


# -- derived subspace operations ------------------------------------------


def centralizer(A: Algebra, S: Subspace) -> Subspace:
    """{x : x*s == s*x for every s in S}, as the kernel of stacked ad-maps."""
    if S.dim == 0:
        return A.full_space()
    stacked = np.concatenate([A.ad_matrix(row) for row in S.basis], axis=1)
    return Subspace(A, linalg.left_kernel(A.field, stacked))


def center(A: Algebra) -> Subspace:
    return centralizer(A, A.full_space())


def is_bracket_closed(S: Subspace) -> bool:
    A = S.algebra
    return all(
        S.contains(A.bracket(u, v)) for u, v in itertools.combinations(S.basis, 2)
    )


def is_multiplicatively_closed(S: Subspace) -> bool:
    A = S.algebra
    return all(
        S.contains(A.multiply(u, v)) for u in S.basis for v in S.basis
    )


def lie_normalizer(A: Algebra, C: Subspace) -> Subspace:
    """{x : x o c in C for every c in C}; requires C to be bracket-closed."""
    if not is_bracket_closed(C):
        raise NotLieClosed("normalizer input must be closed under the Lie bracket")
    if C.dim == 0:
        return A.full_space()
    proj = C.residual_projector()
    stacked = np.concatenate(
        [A.field.reduce(np.dot(A.ad_matrix(row), proj)) for row in C.basis], axis=1
    )
    return Subspace(A, linalg.left_kernel(A.field, stacked))


@dataclass
class LowerCentralSeries:
    terms: list
    nilpotent: bool
    nilpotency_class: int | None


def lower_central_series(A: Algebra, L: Subspace) -> LowerCentralSeries:
    """Left-normed series L >= [L,L] >= [[L,L],L] >= ... until stable or zero."""
    if not is_bracket_closed(L):
        raise NotLieClosed("lower central series input must be a Lie subalgebra")
    terms = [L]
    current = L
    while current.dim > 0:
        rows = [A.bracket(u, v) for u in current.basis for v in L.basis]
        nxt = A.span(rows)
        if nxt == current:
            break
        terms.append(nxt)
        current = nxt
    nilpotent = terms[-1].dim == 0
    return LowerCentralSeries(terms, nilpotent, len(terms) - 1 if nilpotent else None)


def associative_closure(A: Algebra, gens, with_one: bool = True) -> Subspace:
    """Smallest multiplication-closed subspace containing gens (and 1 if with_one)."""
    rows = [A.one] if with_one else []
    rows.extend(A.element(g) if not isinstance(g, np.ndarray) else g for g in gens)
    S = A.span(rows)
    while True:
        products = [A.multiply(u, v) for u in S.basis for v in S.basis]
        bigger = S.sum(A.span(products)) if products else S
        if bigger.dim == S.dim:
            return bigger
        S = bigger


def is_two_sided_ideal(I: Subspace) -> bool:
    A = I.algebra
    for i in range(A.dim):
        e = A.basis_vector(i)
        for v in I.basis:
            if not I.contains(A.multiply(e, v)) or not I.contains(A.multiply(v, e)):
                return False
    return True


def quotient(A: Algebra, I: Subspace) -> tuple[Algebra, np.ndarray]:
    """Quotient algebra A/I and the projection matrix (v @ proj = image coords).

    Representatives are the standard basis vectors at the non-pivot
    columns of I's canonical basis.
    """
    if not is_two_sided_ideal(I):
        raise NotIdeal("quotient requires a two-sided ideal")
    d = A.dim
    nonpivots = [c for c in range(d) if c not in I.pivots]
    proj = I.residual_projector()[:, nonpivots]
    q = len(nonpivots)
    table = A.field.zeros(q, q, q)
    for u, cu in enumerate(nonpivots):
        for v, cv in enumerate(nonpivots):
            prod = A.multiply(A.basis_vector(cu), A.basis_vector(cv))
            table[u, v] = A.field.reduce(np.dot(prod, proj))
    one = A.field.reduce(np.dot(A.one, proj))
    names = tuple(A.basis_names[c] for c in nonpivots)
    return Algebra(A.field, table, one, names), proj


def direct_product(A: Algebra, B: Algebra) -> Algebra:
    """Componentwise product on the concatenated basis; identity (1_A, 1_B)."""
    A.field.check_same(B.field)
    da, db = A.dim, B.dim
    d = da + db
    table = A.field.zeros(d, d, d)
    table[:da, :da, :da] = A.table
    table[da:, da:, da:] = B.table
    one = np.concatenate([A.one, B.one])
    names = tuple(f"({n};0)" for n in A.basis_names) + tuple(f"(0;{n})" for n in B.basis_names)
    return Algebra(A.field, table, one, names)


def tensor_product(A: Algebra, B: Algebra) -> Algebra:
    """Kronecker-product structure constants on the basis e_i (x) f_j."""
    A.field.check_same(B.field)
    da, db = A.dim, B.dim
    d = da * db
    big = np.multiply.outer(A.table, B.table)  # (i,j,k,a,b,c)
    table = A.field.reduce(big.transpose(0, 3, 1, 4, 2, 5).reshape(d, d, d))
    one = A.field.reduce(np.multiply.outer(A.one, B.one).reshape(d))
    names = tuple(f"{na}⊗{nb}" for na in A.basis_names for nb in B.basis_names)
    return Algebra(A.field, table, one, names)


def subalgebra_algebra(A: Algebra, S: Subspace) -> Algebra:
    """S, which must be multiplication-closed and contain 1, as its own algebra."""
    if not S.contains(A.one):
        raise ValidationError("subalgebra must contain the identity")
    r = S.dim
    table = A.field.zeros(r, r, r)
    for i in range(r):
        for j in range(r):
            prod = A.multiply(S.basis[i], S.basis[j])
            if not S.contains(prod):
                raise ValidationError("subspace is not multiplication-closed")
            table[i, j] = S.coordinates(prod)
    one = S.coordinates(A.one)
    names = tuple(f"s{i}" for i in range(r))
    return Algebra(A.field, table, one, names)


def structure_equal(A: Algebra, B: Algebra) -> bool:
    """Same field and identical canonical structure constants and identity."""
    return (
        A.field == B.field
        and A.dim == B.dim
        and bool(np.array_equal(A.table, B.table))
        and bool(np.array_equal(A.one, B.one))
    )
