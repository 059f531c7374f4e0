"""Finite groups as explicit multiplication tables.

The cohomology engine works with bar cochains, which only ever see a
group through its multiplication table.  ``CayleyGroup`` packages the
table with element names and a generating set; index 0 is always the
identity.  Construction checks the axioms exhaustively, which is cheap
at the orders this package handles and catches any bookkeeping slip in
the permutation-to-table conversion.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded
from .permgroup import PermGroup

DEFAULT_COHOMOLOGY_BOUND = 64


class CayleyGroup:
    """A finite group given by its multiplication table.

    table[a, b] is the index of the product a * b; names[i] labels
    element i; generator_indices lists a generating set.  The identity
    sits at index 0.
    """

    __slots__ = ("table", "names", "generator_indices", "inverse")

    def __init__(self, table, names=None, generator_indices=None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("multiplication table must be square")
        n = table.shape[0]
        if n == 0:
            raise ValueError("empty multiplication table")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries out of range")
        if not (np.array_equal(table[0], np.arange(n)) and np.array_equal(table[:, 0], np.arange(n))):
            raise ValueError("index 0 is not an identity")
        left = table[table, :]
        right = np.take(table, table, axis=1)
        if not np.array_equal(left, right):
            raise ValueError("multiplication table is not associative")
        inverse = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(table == 0)
        inverse[rows] = cols
        if np.any(inverse < 0):
            raise ValueError("some element has no inverse")
        if names is None:
            names = tuple(f"g{i}" for i in range(n))
        else:
            names = tuple(names)
            if len(names) != n:
                raise ValueError("need one name per element")
        if generator_indices is None:
            generator_indices = tuple(range(1, n)) if n > 1 else ()
        generator_indices = tuple(generator_indices)
        reached = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in generator_indices:
                    y = int(table[s, x])
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(reached) != n:
            raise ValueError("generator_indices do not generate the group")
        self.table = table
        self.table.setflags(write=False)
        self.names = names
        self.generator_indices = generator_indices
        self.inverse = inverse
        self.inverse.setflags(write=False)

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def __repr__(self) -> str:
        return f"CayleyGroup(order={self.n})"


def cayley_from_permgroup(group: PermGroup, bound: int = DEFAULT_COHOMOLOGY_BOUND) -> CayleyGroup:
    """Convert a permutation group into an explicit multiplication table.

    Elements are sorted by their image tuples, which puts the identity
    at index 0; names are cycle strings.  Orders above ``bound`` are
    refused since the cohomology routines scale with the square of the
    order per cochain dimension.
    """
    if group.order > bound:
        raise BudgetExceeded("group order for table conversion", group.order, bound)
    elements = group.elements()
    index = {perm: i for i, perm in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[a * b]
    names = tuple(perm.cycle_string() for perm in elements)
    gens = []
    for g in group.generators:
        k = index[g]
        if k not in gens:
            gens.append(k)
    if not gens and n == 1:
        gens = []
    return CayleyGroup(table, names=names, generator_indices=tuple(sorted(gens)))


def subgroup_cayley(group: CayleyGroup, elements) -> CayleyGroup:
    """The multiplication table of a subgroup, given its element indices.

    ``elements`` must be closed under the ambient product; indices are
    sorted so the identity again lands at position 0.
    """
    elems = tuple(sorted(set(int(x) for x in elements)))
    if not elems or elems[0] != 0:
        raise ValueError("subgroup must contain the identity (index 0)")
    pos = {g: i for i, g in enumerate(elems)}
    k = len(elems)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            prod = int(group.table[a, b])
            if prod not in pos:
                raise ValueError("element set is not closed under multiplication")
            table[i, j] = pos[prod]
    names = tuple(group.names[g] for g in elems)
    return CayleyGroup(table, names=names)


def _closure_of_commuting_pair(group: CayleyGroup, a: int, b: int):
    """Elements of <a, b> when a and b commute: all products a^i b^j."""
    pow_a = [0]
    x = a
    while x != 0:
        pow_a.append(x)
        x = int(group.table[x, a])
    pow_b = [0]
    x = b
    while x != 0:
        pow_b.append(x)
        x = int(group.table[x, b])
    out = set()
    for u in pow_a:
        row = group.table[u]
        for v in pow_b:
            out.add(int(row[v]))
    return tuple(sorted(out))


def bicyclic_subgroups(group: CayleyGroup):
    """All abelian subgroups generated by at most two elements.

    Returned as sorted tuples of element indices, deduplicated and
    ordered first by size then lexicographically.  The trivial and
    cyclic subgroups are included: they arise from pairs with b = a.
    """
    found = set()
    n = group.n
    for a in range(n):
        for b in range(a, n):
            if group.table[a, b] != group.table[b, a]:
                continue
            found.add(_closure_of_commuting_pair(group, a, b))
    return tuple(sorted(found, key=lambda t: (len(t), t)))
