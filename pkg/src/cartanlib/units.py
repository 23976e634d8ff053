"""Unit groups E(A) of small algebras over prime fields.

Units are found by enumerating all elements and testing the rank of the
left-multiplication matrix (left-invertible equals invertible in a
finite-dimensional unital algebra).  The Cayley table is built with one
vectorized matrix product per unit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import Algebra, Subspace
from .errors import EnumerationTooLarge, NotFiniteField, PreconditionError
from .fields import PrimeField
from .groups import GroupTable
from .radical import radical, radical_complement

ENUMERATION_BOUND = 1 << 16


@dataclass
class UnitGroup:
    group: GroupTable
    embedding: np.ndarray  # row i holds the coordinates of unit i
    ambient: Algebra

    def index_of(self, vec: np.ndarray) -> int:
        key = bytes(np.asarray(vec, dtype=np.int64) % self.ambient.field.p)
        return self._lookup[key]

    def __post_init__(self):
        p = self.ambient.field.p
        self._lookup = {bytes(row % p): i for i, row in enumerate(self.embedding)}


def unit_group(A: Algebra, bound: int = ENUMERATION_BOUND) -> UnitGroup:
    """Enumerate E(A); requires a prime field and |A| <= bound."""
    if not isinstance(A.field, PrimeField):
        raise NotFiniteField("unit groups are enumerated over prime fields only")
    p = A.field.p
    if p ** A.dim > bound:
        raise EnumerationTooLarge(f"|A| = {p ** A.dim} exceeds bound {bound}")
    units = [x for x in A.elements(bound=bound) if A.is_invertible(x)]
    emb = np.array(units, dtype=np.int64)
    index = {bytes(row): i for i, row in enumerate(emb)}
    k = len(units)
    mul = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        rows = np.dot(emb, A.left_mul_matrix(units[i])) % p  # row j = u_i * u_j
        mul[i] = [index[bytes(r)] for r in rows]
    identity = index[bytes(np.asarray(A.one, dtype=np.int64))]
    names = tuple(f"u{i}" for i in range(k))
    return UnitGroup(GroupTable(mul, identity, names), emb, A)


@dataclass
class GroupNilpotency:
    nilpotent: bool
    nilpotency_class: int | None


def group_nilpotency(G: GroupTable) -> GroupNilpotency:
    """Lower central series of the group via commutator subgroups."""
    mul, inv = G.mul, G.inverse
    everyone = np.arange(G.order)
    current = everyone
    steps = 0
    while len(current) > 1:
        t1 = mul[inv[current][:, None], inv[everyone][None, :]]
        t2 = mul[current[:, None], everyone[None, :]]
        comms = np.unique(mul[t1, t2])
        nxt = np.array(G.subgroup_closure(comms.tolist()), dtype=np.int64)
        if np.array_equal(nxt, current):
            return GroupNilpotency(False, None)
        current = nxt
        steps += 1
    return GroupNilpotency(True, steps)


def group_is_soluble(G: GroupTable) -> bool:
    """Derived series reaches the trivial subgroup."""
    current = list(range(G.order))
    while len(current) > 1:
        sub = _derived_of_subset(G, current)
        if len(sub) == len(current):
            return False
        current = sub
    return True


def _derived_of_subset(G: GroupTable, indices) -> list[int]:
    comms = set()
    for g in indices:
        for h in indices:
            c = G.mul[G.mul[int(G.inverse[g]), int(G.inverse[h])], G.mul[g, h]]
            comms.add(int(c))
    return G.subgroup_closure(comms)


def one_plus_radical_indices(U: UnitGroup, rad: Subspace) -> list[int]:
    A = U.ambient
    out = []
    for i, row in enumerate(U.embedding):
        if rad.contains(A.field.reduce(row - A.one)):
            out.append(i)
    return out


def units_in_subspace(U: UnitGroup, S: Subspace) -> list[int]:
    return [i for i, row in enumerate(U.embedding) if S.contains(row)]


def units_decomposition_check(A: Algebra, bound: int = ENUMERATION_BOUND) -> bool:
    """Verify E(A) = (1 + rad(A)) x E(T) with E(T) central, for a complement T.

    Precondition: E(A) nilpotent (raises PreconditionError otherwise).
    """
    U = unit_group(A, bound=bound)
    if not group_nilpotency(U.group).nilpotent:
        raise PreconditionError("unit group is not nilpotent")
    rad = radical(A)
    comp = radical_complement(A, rad=rad)
    one_rad = set(one_plus_radical_indices(U, rad))
    e_t = set(units_in_subspace(U, comp))
    if len(one_rad) * len(e_t) != U.group.order:
        return False
    if one_rad & e_t != {U.group.identity}:
        return False
    mul = U.group.mul
    for i in e_t:
        if not np.array_equal(mul[i], mul[:, i]):
            return False
    return True
