"""Radical computation, Wedderburn-Malcev complements, solubility, reducedness.

Characteristic 0 uses the classical trace-form kernel.  Characteristic p
uses the descending chain of p-power trace conditions: at stage i an
element x of the current candidate I survives iff for every y in I the
integer trace of W^(p^i) is divisible by p^(i+1), where W is the lift of
the left-multiplication matrix of x*y to representatives {0..p-1}.  The
trace divided by p^i is GF(p)-linear on I, so each stage is one kernel
computation.  Every result is verified a posteriori: two-sided ideal,
associative-nilpotent, and semisimple quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .algebra import (
    Algebra,
    Subspace,
    is_multiplicatively_closed,
    is_two_sided_ideal,
    quotient,
    subalgebra_algebra,
)
from .errors import NotInRadical, VerificationFailed
from .fields import PrimeField
from .polynomials import minimal_polynomial

_SUBSET_SEARCH_BOUND = 5000


def radical(A: Algebra, verify: bool = True) -> Subspace:
    """The Jacobson (= nil) radical of A."""
    if A.field.characteristic == 0:
        rad = _radical_char0(A)
    else:
        rad = _radical_charp(A)
    if verify:
        _verify_radical(A, rad)
    return rad


def _trace_gram(A: Algebra) -> np.ndarray:
    """Gram matrix of the trace form (x, y) -> trace(L_{xy})."""
    g = A.field.zeros(A.dim, A.dim)
    for i in range(A.dim):
        for j in range(i, A.dim):
            prod = A.multiply(A.basis_vector(i), A.basis_vector(j))
            t = linalg.trace(A.field, A.left_mul_matrix(prod))
            g[i, j] = t
            g[j, i] = t
    return g


def _radical_char0(A: Algebra) -> Subspace:
    gram = _trace_gram(A)
    return Subspace(A, linalg.left_kernel(A.field, gram))


def _matpow_mod(w: np.ndarray, e: int, modulus: int) -> np.ndarray:
    result = np.eye(w.shape[0], dtype=np.int64) % modulus
    base = w % modulus
    while e:
        if e & 1:
            result = np.dot(result, base) % modulus
        base = np.dot(base, base) % modulus
        e >>= 1
    return result


def _radical_charp(A: Algebra) -> Subspace:
    p = A.field.p
    current = linalg.eye(A.field, A.dim)
    power = 1  # p^i
    while power <= A.dim and current.shape[0] > 0:
        r = current.shape[0]
        modulus = power * p
        gram = np.zeros((r, r), dtype=np.int64)
        for a in range(r):
            for b in range(r):
                z = A.multiply(current[a], current[b])
                w = A.left_mul_matrix(z)  # entries already lifted to 0..p-1
                t = int(np.trace(_matpow_mod(w, power, modulus))) % modulus
                if t % power != 0:
                    raise VerificationFailed(
                        "radical chain invariant violated (trace not divisible)"
                    )
                gram[a, b] = (t // power) % p
        coeffs = linalg.left_kernel(A.field, gram)
        if coeffs.shape[0] == r:
            pass  # stage cuts nothing; later stages may still cut
        current = linalg.row_space(
            A.field, A.field.reduce(np.dot(coeffs, current))
        ) if coeffs.size else A.field.zeros(0, A.dim)
        power *= p
    return Subspace(A, current)


def _verify_radical(A: Algebra, rad: Subspace) -> None:
    if not is_two_sided_ideal(rad):
        raise VerificationFailed("computed radical is not a two-sided ideal")
    if not is_nilpotent_subspace(rad):
        raise VerificationFailed("computed radical is not nilpotent")
    quot, _ = quotient(A, rad)
    if radical(quot, verify=False).dim != 0:
        raise VerificationFailed("quotient by computed radical is not semisimple")


def is_nilpotent_subspace(S: Subspace) -> bool:
    """True iff some power of the subspace (under the algebra product) is zero.

    Requires S*S <= S (true for ideals and subalgebras), so the power
    chain descends and stabilizes.
    """
    A = S.algebra
    current = S
    while current.dim > 0:
        rows = [A.multiply(u, v) for u in current.basis for v in S.basis]
        nxt = A.span(rows)
        if nxt == current:
            return False
        current = nxt
    return True


def is_nilpotent_element(A: Algebra, x: np.ndarray) -> bool:
    """True iff the minimal polynomial of x is t^k (x == 0 included)."""
    m = minimal_polynomial(A, x)
    return all(A.field.is_zero(c) for c in m.coeffs[:-1])


@dataclass
class RadicalDecomposition:
    """rad(A) plus a Wedderburn-Malcev complement, with invariants verified."""

    radical: Subspace
    complement: Subspace
    ambient: Algebra


def radical_decomposition(A: Algebra) -> RadicalDecomposition:
    rad = radical(A)
    comp = radical_complement(A, rad=rad)
    return RadicalDecomposition(rad, comp, A)


def radical_complement(A: Algebra, rad: Subspace | None = None) -> Subspace:
    """A unital subalgebra C with C + rad(A) = A and C ∩ rad(A) = 0.

    Tries spans of plain basis-vector subsets first (so group algebras
    return the textbook subgroup complement), then lifts a complement
    through the chain rad >= rad^2 >= ... >= 0 by solving the
    multiplicativity-defect linear system at each level.
    """
    if rad is None:
        rad = radical(A)
    if rad.dim == 0:
        return A.full_space()
    comp = _preferred_subset_complement(A, rad)
    if comp is None:
        comp = _lift_complement(A, rad)
    _verify_complement(A, rad, comp)
    return comp


def _verify_complement(A: Algebra, rad: Subspace, comp: Subspace) -> None:
    ok = (
        comp.dim + rad.dim == A.dim
        and comp.intersect(rad).dim == 0
        and comp.contains(A.one)
        and is_multiplicatively_closed(comp)
    )
    if not ok:
        raise VerificationFailed("computed radical complement fails its invariants")


def _preferred_subset_complement(A: Algebra, rad: Subspace) -> Subspace | None:
    codim = A.dim - rad.dim
    if comb(A.dim, codim) > _SUBSET_SEARCH_BOUND:
        return None
    for subset in itertools.combinations(range(A.dim), codim):
        rows = np.array([A.basis_vector(i) for i in subset])
        if linalg.rank(A.field, np.concatenate([rad.basis, rows], axis=0)) != A.dim:
            continue
        cand = Subspace(A, rows)
        if is_multiplicatively_closed(cand):
            return cand
    return None


def _lift_complement(A: Algebra, rad: Subspace) -> Subspace:
    rad2 = A.span([A.multiply(u, v) for u in rad.basis for v in rad.basis])
    if rad2.dim == 0:
        return _complement_square_zero(A, rad)
    # reduce nilpotency: find a complement in A/rad^2, pull its preimage
    # back (a subalgebra with radical rad^2) and recurse inside it
    quot, proj = quotient(A, rad2)
    nonpivots = [c for c in range(A.dim) if c not in rad2.pivots]
    section = np.array([A.basis_vector(c) for c in nonpivots])
    cbar = radical_complement(quot)
    pre_rows = np.concatenate(
        [A.field.reduce(np.dot(cbar.basis, section)), rad2.basis], axis=0
    )
    pre = Subspace(A, pre_rows)
    sub = subalgebra_algebra(A, pre)
    inner = radical_complement(sub)
    rows = A.field.reduce(np.dot(inner.basis, pre.basis))
    return Subspace(A, rows)


def _complement_square_zero(A: Algebra, rad: Subspace) -> Subspace:
    """Wedderburn principal theorem step for rad^2 == 0.

    With a linear section s of A -> A/rad, solve for a correction
    phi: (A/rad) -> rad making s + phi multiplicative.  The system is
    always solvable over a perfect base field.
    """
    f = A.field
    quot, proj = quotient(A, rad)
    nonpivots = [c for c in range(A.dim) if c not in rad.pivots]
    section = np.array([A.basis_vector(c) for c in nonpivots])
    q, r = quot.dim, rad.dim

    def rad_coords(vec: np.ndarray) -> np.ndarray:
        return rad.coordinates(vec)

    # left/right module actions of the section basis on rad, in rad coordinates
    lact = [
        np.array([rad_coords(A.multiply(section[u], rad.basis[t])) for t in range(r)])
        for u in range(q)
    ]
    ract = [
        np.array([rad_coords(A.multiply(rad.basis[t], section[v])) for t in range(r)])
        for v in range(q)
    ]

    nunk = q * r
    eq_rows = []
    rhs = []
    for u in range(q):
        for v in range(q):
            prod_q = quot.multiply(quot.basis_vector(u), quot.basis_vector(v))
            defect = f.reduce(
                A.multiply(section[u], section[v]) - np.dot(prod_q, section)
            )
            defect_coords = rad_coords(defect)
            for t0 in range(r):
                row = f.zeros(nunk)
                for w in range(q):
                    if not f.is_zero(prod_q[w]):
                        row[w * r + t0] = f.add(row[w * r + t0], prod_q[w])
                for t in range(r):
                    row[v * r + t] = f.sub(row[v * r + t], lact[u][t, t0])
                    row[u * r + t] = f.sub(row[u * r + t], ract[v][t, t0])
                eq_rows.append(row)
                rhs.append(defect_coords[t0])
    sol = _solve_system(f, np.array(eq_rows), f.array(rhs))
    if sol is None:
        raise VerificationFailed("complement correction system is unsolvable")
    phi = sol.reshape(q, r)
    rows = f.reduce(section + np.dot(phi, rad.basis))
    return Subspace(A, rows)


def _solve_system(field, eq_matrix: np.ndarray, rhs: np.ndarray):
    """One solution x of eq_matrix @ x == rhs, free variables set to 0."""
    n = eq_matrix.shape[1]
    aug = np.concatenate([eq_matrix, rhs.reshape(-1, 1)], axis=1)
    red, pivots = linalg.rref(field, aug)
    sol = field.zeros(n)
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        sol[pc] = red[i, n]
    return sol


def is_soluble(A: Algebra) -> bool:
    """True iff A/rad(A) is commutative."""
    quot, _ = quotient(A, radical(A))
    return quot.is_commutative()


def is_reduced(A: Algebra) -> str:
    """'reduced' / 'not_reduced' / 'undetermined' (commutativity screen over Q)."""
    quot, _ = quotient(A, radical(A))
    if quot.is_commutative():
        return "reduced"
    if isinstance(A.field, PrimeField):
        # finite division rings are fields, so a non-commutative semisimple
        # part always carries nilpotents outside the radical
        return "not_reduced"
    return "undetermined"


def conjugate_subalgebra(
    A: Algebra, S: Subspace, r: np.ndarray, rad: Subspace | None = None
) -> Subspace:
    """(1+r)^-1 S (1+r) for r in rad(A); inverse via the geometric series."""
    if rad is None:
        rad = radical(A)
    if not rad.contains(r):
        raise NotInRadical("conjugator offset must lie in the radical")
    u = A.field.reduce(A.one + r)
    inv = A.zero()
    term = A.one.copy()
    while np.any(term != A.field.zero):
        inv = A.field.reduce(inv + term)
        term = A.multiply(term, A.field.reduce(-r))
    rows = [A.multiply(A.multiply(inv, row), u) for row in S.basis]
    return Subspace(A, np.array(rows))
