"""Finite groups as Cayley tables, dihedral/cyclic constructors, and group algebras.

Group elements are indices into a multiplication table.  The dihedral
table uses the element ordering 1, a, ..., a^(n-1), b, ab, ..., a^(n-1)b
so that textbook bases of radicals and complements can be written down
directly in coordinates.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import Algebra, Subspace
from .errors import InvalidOrder, NotSubgroup, ValidationError
from .fields import Field

_FULL_VERIFY_BOUND = 1024


class GroupTable:
    """A finite group given by its Cayley table.

    Associativity, identity and inverses are verified on construction;
    tables above order 1024 (which only arise from internally built unit
    groups) are spot-checked on 4096 random triples instead.
    """

    def __init__(self, mul, identity: int, element_names=None):
        self.mul = np.asarray(mul, dtype=np.int64)
        if self.mul.ndim != 2 or self.mul.shape[0] != self.mul.shape[1]:
            raise ValidationError("Cayley table must be square")
        self.order = self.mul.shape[0]
        self.identity = int(identity)
        if not (0 <= self.identity < self.order):
            raise ValidationError("identity index out of range")
        if element_names is None:
            element_names = tuple(f"g{i}" for i in range(self.order))
        self.element_names = tuple(str(n) for n in element_names)
        if len(self.element_names) != self.order:
            raise ValidationError("need one name per element")
        self._verify()
        self.inverse = self._build_inverses()

    def _verify(self) -> None:
        n = self.order
        if np.any(self.mul < 0) or np.any(self.mul >= n):
            raise ValidationError("Cayley table entries out of range")
        e = self.identity
        if not np.array_equal(self.mul[e], np.arange(n)) or not np.array_equal(self.mul[:, e], np.arange(n)):
            raise ValidationError("designated identity is not an identity")
        if n <= _FULL_VERIFY_BOUND:
            for a in range(n):
                # (a*b)*c == a*(b*c) for all b, c at once
                if not np.array_equal(self.mul[self.mul[a], :], self.mul[a][self.mul]):
                    raise ValidationError("Cayley table is not associative")
        else:
            rng = np.random.default_rng(0)
            trips = rng.integers(0, n, size=(4096, 3))
            for a, b, c in trips:
                if self.mul[self.mul[a, b], c] != self.mul[a, self.mul[b, c]]:
                    raise ValidationError("Cayley table is not associative")

    def _build_inverses(self) -> np.ndarray:
        inv = np.full(self.order, -1, dtype=np.int64)
        for g in range(self.order):
            hits = np.nonzero(self.mul[g] == self.identity)[0]
            if len(hits) != 1 or self.mul[hits[0], g] != self.identity:
                raise ValidationError(f"element {g} has no two-sided inverse")
            inv[g] = hits[0]
        return inv

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = int(self.mul[x, g])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def subgroup_closure(self, gens) -> list[int]:
        """Sorted index list of the subgroup generated by gens."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = sorted(set(int(g) for g in gens))
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    for y in (int(self.mul[x, g]), int(self.mul[g, x])):
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def is_subgroup(self, indices) -> bool:
        s = sorted(set(int(i) for i in indices))
        if not s or self.identity not in s:
            return False
        sset = set(s)
        return all(int(self.mul[a, b]) in sset for a in s for b in s) and all(
            int(self.inverse[a]) in sset for a in s
        )

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "mul": self.mul.tolist(),
            "identity": self.identity,
            "names": list(self.element_names),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupTable":
        return cls(data["mul"], data["identity"], data.get("names"))

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"


def cyclic(n: int) -> GroupTable:
    """The cyclic group Z/n with elements 1, g, ..., g^(n-1)."""
    if n < 1:
        raise InvalidOrder("cyclic group needs n >= 1")
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return GroupTable(mul, 0, names[:n])


def dihedral(n: int) -> GroupTable:
    """The dihedral group of order 2n: o(a)=n, o(b)=2, bab^-1 = a^-1.

    Element i < n is a^i; element n+i is a^i b.
    """
    if n < 1:
        raise InvalidOrder("dihedral group needs n >= 1")

    def mult(x: int, y: int) -> int:
        xr, xf = x % n, x >= n  # rotation exponent, flip bit
        yr, yf = y % n, y >= n
        # (a^xr b^xf)(a^yr b^yf): move b past a^yr using b a = a^-1 b
        r = (xr - yr) % n if xf else (xr + yr) % n
        f = xf ^ yf
        return r + (n if f else 0)

    mul = [[mult(x, y) for y in range(2 * n)] for x in range(2 * n)]

    def name(i: int) -> str:
        r, f = i % n, i >= n
        if not f:
            return "1" if r == 0 else ("a" if r == 1 else f"a^{r}")
        return "b" if r == 0 else ("ab" if r == 1 else f"a^{r}b")

    return GroupTable(mul, 0, [name(i) for i in range(2 * n)])


def direct_product_group(G: GroupTable, H: GroupTable) -> GroupTable:
    """G x H with element (g, h) at index g*|H| + h."""
    n, m = G.order, H.order
    mul = np.zeros((n * m, n * m), dtype=np.int64)
    for g1, h1, g2, h2 in itertools.product(range(n), range(m), range(n), range(m)):
        mul[g1 * m + h1, g2 * m + h2] = G.mul[g1, g2] * m + H.mul[h1, h2]
    names = [f"({a},{b})" for a in G.element_names for b in H.element_names]
    return GroupTable(mul, G.identity * m + H.identity, names)


def derived_subgroup(G: GroupTable) -> list[int]:
    """The subgroup generated by all commutators g^-1 h^-1 g h."""
    comms = set()
    for g in range(G.order):
        for h in range(G.order):
            c = G.mul[G.mul[int(G.inverse[g]), int(G.inverse[h])], G.mul[g, h]]
            comms.add(int(c))
    return G.subgroup_closure(comms)


def group_algebra(field: Field, G: GroupTable) -> Algebra:
    """KG: structure constants are the permutation tensor of the Cayley table."""
    n = G.order
    table = field.zeros(n, n, n)
    for i in range(n):
        for j in range(n):
            table[i, j, int(G.mul[i, j])] = field.one
    one = field.zeros(n)
    one[G.identity] = field.one
    return Algebra(field, table, one, G.element_names)


def augmentation_left_ideal(KG: Algebra, G: GroupTable, P) -> Subspace:
    """KG*Aug(KP): the span of { g*(x-1) : g in G, 1 != x in P }.

    For normal P this is the kernel of the linearized projection
    G -> G/P, hence a two-sided ideal.
    """
    if KG.dim != G.order:
        raise ValidationError("algebra is not the group algebra of the given group")
    indices = sorted(set(int(i) for i in P))
    if not G.is_subgroup(indices):
        raise NotSubgroup("P is not a subgroup")
    rows = []
    for g in range(G.order):
        for x in indices:
            if x == G.identity:
                continue
            vec = KG.field.zeros(KG.dim)
            vec[int(G.mul[g, x])] = KG.field.add(vec[int(G.mul[g, x])], KG.field.one)
            vec[g] = KG.field.sub(vec[g], KG.field.one)
            rows.append(vec)
    return KG.span(rows)


def is_p_group(G: GroupTable, indices, p: int) -> bool:
    k = len(set(int(i) for i in indices))
    while k % p == 0:
        k //= p
    return k == 1
