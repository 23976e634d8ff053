"""Separable elements, maximal tori, Cartan subalgebras and their certificates.

The strategy: inside a Wedderburn-Malcev complement C, grow a torus T
from span{1} by repeatedly adjoining a separable element of the
centralizer of T in C; the Cartan subalgebra of the associated Lie
algebra is then the centralizer of T in the whole algebra, which splits
as (centralizer of T in the radical) + T.  Every certificate is checked
a posteriori, so a premature stop of the greedy search is detectable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import linalg
from .algebra import (
    Algebra,
    Subspace,
    associative_closure,
    center,
    centralizer,
    is_bracket_closed,
    is_multiplicatively_closed,
    lie_normalizer,
    lower_central_series,
    subalgebra_algebra,
)
from .errors import NotCentralSimple, NotTorus, VerificationFailed
from .fields import PrimeField
from .polynomials import is_squarefree, minimal_polynomial
from .radical import (
    conjugate_subalgebra,
    is_soluble,
    radical,
    radical_complement,
)

_RANDOM_SEARCH_TRIES = 256


def is_separable_element(A: Algebra, x: np.ndarray) -> bool:
    """True iff the minimal polynomial of x is squarefree (base fields are perfect)."""
    return is_squarefree(minimal_polynomial(A, x))


def is_torus(A: Algebra, T: Subspace) -> bool:
    """Commutative unital multiplication-closed subspace with nondegenerate trace form.

    Nondegeneracy of the trace form of T as a standalone algebra is
    equivalent, over a perfect field, to every element of T being
    separable.
    """
    if not T.contains(A.one) or not is_multiplicatively_closed(T):
        return False
    for u, v in itertools.combinations(T.basis, 2):
        if np.any(A.multiply(u, v) != A.multiply(v, u)):
            return False
    return _trace_form_nondegenerate(A, T)


def _trace_form_nondegenerate(A: Algebra, T: Subspace) -> bool:
    sub = subalgebra_algebra(A, T)
    gram = sub.field.zeros(sub.dim, sub.dim)
    for i in range(sub.dim):
        for j in range(i, sub.dim):
            prod = sub.multiply(sub.basis_vector(i), sub.basis_vector(j))
            t = linalg.trace(sub.field, sub.left_mul_matrix(prod))
            gram[i, j] = t
            gram[j, i] = t
    return linalg.rank(sub.field, gram) == sub.dim


@dataclass
class TorusCertificate:
    torus: Subspace
    ambient: Algebra
    self_centralizing_in: Subspace | None = None


@dataclass
class CartanCertificate:
    cartan: Subspace
    torus: TorusCertificate
    nilpotency_class: int
    checks: dict = dataclass_field(default_factory=dict)


def maximal_torus(
    A: Algebra, rng_seed: int = 0, complement: Subspace | None = None
) -> TorusCertificate:
    """Greedy maximal torus inside a radical complement, starting from span{1}.

    The search for a separable element outside T sweeps the centralizer
    basis, then pairwise sums of basis vectors, then seeded random
    combinations; the result is certified as a torus.
    """
    if complement is None:
        complement = radical_complement(A)
    rng = random.Random(rng_seed)
    T = A.span([A.one])
    while True:
        cen = centralizer(A, T).intersect(complement)
        t = _separable_outside(A, cen, T, rng)
        if t is None:
            break
        T = associative_closure(A, list(T.basis) + [t], with_one=True)
    if not is_torus(A, T):
        raise VerificationFailed("greedy torus search produced a non-torus")
    return TorusCertificate(T, A, complement)


def _separable_outside(A: Algebra, Z: Subspace, T: Subspace, rng: random.Random):
    """A separable element of Z outside T, or None if the staged search fails."""
    if Z.dim <= T.dim:
        return None

    def good(candidate: np.ndarray) -> bool:
        return not T.contains(candidate) and is_separable_element(A, candidate)

    for row in Z.basis:
        if good(row):
            return row
    for u, v in itertools.combinations(Z.basis, 2):
        cand = A.field.reduce(u + v)
        if good(cand):
            return cand
    for _ in range(_RANDOM_SEARCH_TRIES):
        if isinstance(A.field, PrimeField):
            coeffs = [rng.randrange(A.field.p) for _ in range(Z.dim)]
        else:
            coeffs = [rng.randint(-4, 4) for _ in range(Z.dim)]
        cand = A.field.reduce(np.dot(A.field.array(coeffs), Z.basis))
        if np.any(cand != A.field.zero) and good(cand):
            return cand
    return None


def cartan_subalgebra(A: Algebra, rng_seed: int = 0) -> CartanCertificate:
    """Cartan subalgebra of the associated Lie algebra, as the centralizer of a maximal torus."""
    rad = radical(A)
    comp = radical_complement(A, rad=rad)
    torus_cert = maximal_torus(A, rng_seed=rng_seed, complement=comp)
    T = torus_cert.torus
    cartan = centralizer(A, T)
    c_rad = cartan.intersect(rad)
    checks = {
        "decomposition_crad_plus_torus": cartan == c_rad.sum(T)
        and c_rad.intersect(T).dim == 0,
    }
    ok, diag = verify_cartan(A, cartan)
    checks.update(diag)
    if not ok or not all(checks.values()):
        raise VerificationFailed(f"cartan certificate failed: {checks}")
    series = lower_central_series(A, cartan)
    return CartanCertificate(cartan, torus_cert, series.nilpotency_class, checks)


def verify_cartan(A: Algebra, C: Subspace) -> tuple[bool, dict]:
    """Direct check of the Cartan property, with associated-structure diagnostics."""
    diag = {
        "bracket_closed": is_bracket_closed(C),
        "lie_nilpotent": False,
        "self_normalizing": False,
        "multiplication_closed": is_multiplicatively_closed(C),
        "contains_one": C.contains(A.one),
    }
    if diag["bracket_closed"]:
        diag["lie_nilpotent"] = lower_central_series(A, C).nilpotent
        diag["self_normalizing"] = lie_normalizer(A, C) == C
    ok = diag["bracket_closed"] and diag["lie_nilpotent"] and diag["self_normalizing"]
    return ok, diag


def index_of_central_simple(A: Algebra) -> int:
    """Dimension of a Cartan subalgebra of a central simple algebra (= its degree).

    Preconditions verified: zero radical, one-dimensional center, and the
    two-sided ideal generated by each basis vector is everything.
    """
    if radical(A).dim != 0:
        raise NotCentralSimple("algebra has a nonzero radical")
    if center(A) != A.span([A.one]):
        raise NotCentralSimple("center is larger than the scalars")
    for i in range(A.dim):
        x = A.basis_vector(i)
        rows = [
            A.multiply(A.multiply(A.basis_vector(a), x), A.basis_vector(b))
            for a in range(A.dim)
            for b in range(A.dim)
        ]
        if A.span(rows).dim != A.dim:
            raise NotCentralSimple("a basis element generates a proper ideal")
    cert = cartan_subalgebra(A)
    d = cert.cartan.dim
    if d * d != A.dim:
        raise VerificationFailed("cartan dimension does not square to the algebra dimension")
    return d


def soluble_hull(A: Algebra, T) -> Subspace:
    """The subalgebra rad(A) + T for a torus T (soluble, radical rad(A))."""
    torus = T.torus if isinstance(T, TorusCertificate) else T
    if not is_torus(A, torus):
        raise NotTorus("soluble hull needs a torus")
    rad = radical(A)
    hull = rad.sum(torus)
    if rad.intersect(torus).dim != 0 or not is_multiplicatively_closed(hull):
        raise VerificationFailed("soluble hull failed its invariants")
    return hull


@dataclass
class LieNilpotencyReport:
    """The five equivalent conditions for Lie-nilpotency of a unital algebra."""

    lie_nilpotent: bool
    central_complement: bool
    soluble_with_unique_complement: bool
    separable_elements_form_complement: bool | None
    separable_elements_form_subspace: bool | None
    skipped: tuple[str, ...] = ()

    def computable_verdicts(self) -> list[bool]:
        out = [self.lie_nilpotent, self.central_complement, self.soluble_with_unique_complement]
        for v in (self.separable_elements_form_complement, self.separable_elements_form_subspace):
            if v is not None:
                out.append(v)
        return out


def lie_nilpotency_report(
    A: Algebra, rng_seed: int = 0, enum_bound: int = 1 << 16
) -> LieNilpotencyReport:
    rad = radical(A)
    comp = radical_complement(A, rad=rad)
    zen = center(A)

    nilpotent = lower_central_series(A, A.full_space()).nilpotent
    central = zen.contains_subspace(comp)
    unique = is_soluble(A) and _complement_conjugation_invariant(A, comp, rad, rng_seed)

    skipped: list[str] = []
    form_complement: bool | None = None
    form_subspace: bool | None = None
    if isinstance(A.field, PrimeField) and A.field.p ** A.dim <= enum_bound:
        separable = [x for x in A.elements(bound=enum_bound) if is_separable_element(A, x)]
        span = A.span(separable)
        form_subspace = len(separable) == A.field.p ** span.dim
        form_complement = (
            form_subspace
            and span.dim + rad.dim == A.dim
            and span.intersect(rad).dim == 0
            and is_multiplicatively_closed(span)
            and span.contains(A.one)
        )
    else:
        skipped = ["separable_elements_form_complement", "separable_elements_form_subspace"]
    return LieNilpotencyReport(
        nilpotent, central, unique, form_complement, form_subspace, tuple(skipped)
    )


def _complement_conjugation_invariant(
    A: Algebra, comp: Subspace, rad: Subspace, rng_seed: int
) -> bool:
    """Probe uniqueness of the complement under conjugation by 1 + rad(A).

    Over GF(p) the probes conjugate by 1+r for every radical basis vector
    r; these generate the whole group 1 + rad(A), so invariance under the
    probes is equivalent to uniqueness.  Over Q random probes are added.
    """
    probes = list(rad.basis)
    if not isinstance(A.field, PrimeField):
        rng = random.Random(rng_seed)
        for _ in range(8):
            coeffs = A.field.array([rng.randint(-3, 3) for _ in range(rad.dim)])
            probes.append(A.field.reduce(np.dot(coeffs, rad.basis)))
    for r in probes:
        if conjugate_subalgebra(A, comp, r, rad=rad) != comp:
            return False
    return True
