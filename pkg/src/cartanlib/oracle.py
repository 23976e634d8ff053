"""Brute-force ground truth for small instances.

Subspace enumeration iterates over reduced-row-echelon profiles (pivot
column subsets plus free-entry assignments), which is canonical and
duplicate-free.  Bounds are hard: GF(2)/GF(3) and dimension at most 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, Subspace, is_two_sided_ideal
from .cartan import verify_cartan
from .errors import InvalidN, TooLarge, VerificationFailed
from .fields import PrimeField
from .radical import is_nilpotent_element


@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of increasing sequences partitioning {1..n}."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]


def ordered_bipartitions(n: int) -> list[Bipartition]:
    """All splits of {1..n} into two nonempty increasing sequences (2^n - 2 of them)."""
    if n < 2:
        raise InvalidN("bipartitions need n >= 2")
    out = []
    universe = tuple(range(1, n + 1))
    for r in range(1, n):
        for alpha in itertools.combinations(universe, r):
            beta = tuple(i for i in universe if i not in alpha)
            out.append(Bipartition(alpha, beta))
    return out


def _check_oracle_bounds(A: Algebra) -> None:
    if not isinstance(A.field, PrimeField) or A.field.p not in (2, 3):
        raise TooLarge("oracle enumeration only runs over GF(2) and GF(3)")
    if A.dim > 4:
        raise TooLarge("oracle enumeration only runs in dimension <= 4")


def enumerate_subspaces(A: Algebra):
    """Every subspace of the ambient space, each exactly once, via RREF profiles."""
    _check_oracle_bounds(A)
    p, d = A.field.p, A.dim
    yield A.zero_subspace()
    for r in range(1, d + 1):
        for pivots in itertools.combinations(range(d), r):
            free = [
                (i, c)
                for i in range(r)
                for c in range(pivots[i] + 1, d)
                if c not in pivots
            ]
            for values in itertools.product(range(p), repeat=len(free)):
                mat = np.zeros((r, d), dtype=np.int64)
                for i in range(r):
                    mat[i, pivots[i]] = 1
                for (i, c), v in zip(free, values):
                    mat[i, c] = v
                yield Subspace(A, mat)


def enumerate_cartans_bruteforce(A: Algebra) -> list[Subspace]:
    """All Cartan subalgebras of the associated Lie algebra, by exhaustive scan."""
    _check_oracle_bounds(A)
    return [S for S in enumerate_subspaces(A) if verify_cartan(A, S)[0]]


def radical_bruteforce(A: Algebra) -> Subspace:
    """Largest two-sided ideal consisting of nilpotent elements, by exhaustive scan."""
    _check_oracle_bounds(A)
    candidates = []
    for S in enumerate_subspaces(A):
        if not is_two_sided_ideal(S):
            continue
        if all(is_nilpotent_element(A, x) for x in S.elements()):
            candidates.append(S)
    best = max(candidates, key=lambda S: S.dim)
    for other in candidates:
        if not best.contains_subspace(other):
            raise VerificationFailed("nil ideals are not contained in a largest one")
    return best
