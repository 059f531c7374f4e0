"""Finite permutation groups with a deterministic stabilizer chain.

Membership tests sift through a base-and-strong-generators chain built
by the Schreier-Sims procedure, so the group order is known without
listing elements.  Full element enumeration is lazy and guarded by a
hard bound, since conjugacy class work genuinely needs the list while
order and membership questions never do.

Nothing here is randomized: base points are the smallest moved points,
orbits grow in breadth-first order over the generator list, element
lists are sorted by image tuple.  Two runs on the same generators give
identical chains, class orders and labels.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from math import gcd

from .errors import BudgetExceeded
from .permutation import Permutation, parse_cycles

DEFAULT_ENUMERATION_BOUND = 200_000


class PermGroup:
    def __init__(self, generators, degree=None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for a group with no generators")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise ValueError("generators have mixed degrees")
        self.degree = degree
        seen = set()
        kept = []
        for g in generators:
            if not g.is_identity() and g not in seen:
                seen.add(g)
                kept.append(g)
        self.generators = tuple(kept)
        self._base, self._levels, self._transversals = _build_chain(self.generators, degree)
        self._elements = None
        self._classes = None

    @property
    def order(self) -> int:
        result = 1
        for t in self._transversals:
            result *= len(t)
        return result

    def sift(self, g: Permutation) -> Permutation:
        """Residue of g after stripping through the chain; identity iff member."""
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        for level, t in enumerate(self._transversals):
            u = t.get(g(self._base[level]))
            if u is None:
                return g
            g = g * u.inverse()
        return g

    def __contains__(self, g: Permutation) -> bool:
        return self.sift(g).is_identity()

    def __len__(self) -> int:
        return self.order

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> tuple[Permutation, ...]:
        """All elements sorted by image tuple.  Cached after the first call."""
        if self._elements is None:
            if self.order > bound:
                raise BudgetExceeded("element enumeration", self.order, bound)
            out = [Permutation.identity(self.degree)]
            for level in range(len(self._base) - 1, -1, -1):
                cosets = sorted(self._transversals[level].values())
                out = [h * u for u in cosets for h in out]
            self._elements = tuple(sorted(out))
        return self._elements

    def is_transitive(self) -> bool:
        if self.degree == 0:
            return True
        orbit = {0}
        queue = [0]
        while queue:
            p = queue.pop()
            for g in self.generators:
                q = g(p)
                if q not in orbit:
                    orbit.add(q)
                    queue.append(q)
        return len(orbit) == self.degree

    def centre_order(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
        gens = self.generators
        return sum(
            1 for e in self.elements(bound) if all(e * g == g * e for g in gens)
        )

    def conjugacy_classes(self, bound: int = DEFAULT_ENUMERATION_BOUND):
        if self._classes is None:
            self._classes = conjugacy_classes(self, bound)
        return self._classes

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"PermGroup(<{gens}>, degree={self.degree})"


def group_from_generators(perms, degree=None) -> PermGroup:
    return PermGroup(perms, degree)


def _build_chain(generators, degree):
    """Deterministic Schreier-Sims.  Returns (base, level gens, transversals)."""
    identity = Permutation.identity(degree)
    base: list[int] = []
    for g in generators:
        if all(g(b) == b for b in base):
            base.append(min(p for p in range(degree) if g(p) != p))
    levels = [
        [g for g in generators if all(g(b) == b for b in base[:m])]
        for m in range(len(base))
    ]
    transversals: list[dict[int, Permutation]] = [{} for _ in base]
    orbit_orders: list[list[int]] = [[] for _ in base]

    def rebuild(m):
        t = {base[m]: identity}
        order = [base[m]]
        qi = 0
        while qi < len(order):
            p = order[qi]
            qi += 1
            for s in levels[m]:
                q = s(p)
                if q not in t:
                    t[q] = t[p] * s
                    order.append(q)
        transversals[m] = t
        orbit_orders[m] = order

    for m in range(len(base)):
        rebuild(m)

    def sift_from(g, start):
        for m in range(start, len(base)):
            u = transversals[m].get(g(base[m]))
            if u is None:
                return g, m
            g = g * u.inverse()
        return g, len(base)

    # Verify the Schreier condition bottom-up; a failure deposits the sift
    # residue as a new strong generator and resumes at the level it fixed.
    i = len(base) - 1
    while i >= 0:
        clean = True
        for p in orbit_orders[i]:
            u_p = transversals[i][p]
            for s in levels[i]:
                h = u_p * s * transversals[i][s(p)].inverse()
                if h.is_identity():
                    continue
                y, j = sift_from(h, i + 1)
                if y.is_identity():
                    continue
                if j == len(base):
                    base.append(min(pt for pt in range(degree) if y(pt) != pt))
                    levels.append([])
                    transversals.append({})
                    orbit_orders.append([])
                for m in range(i + 1, j + 1):
                    levels[m].append(y)
                    rebuild(m)
                i = j
                clean = False
                break
            if not clean:
                break
        if clean:
            i -= 1
    return base, levels, transversals


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class; the representative is the lex-least element."""

    label: str
    representative: Permutation
    size: int
    element_order: int
    elements: frozenset

    def __contains__(self, g: Permutation) -> bool:
        return g in self.elements

    def __repr__(self) -> str:
        return (
            f"ConjugacyClass({self.label}, rep={self.representative.cycle_string()},"
            f" size={self.size})"
        )


def _letters(k: int) -> str:
    """0 -> A, 25 -> Z, 26 -> AA, in the usual spreadsheet order."""
    out = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        out = string.ascii_uppercase[r] + out
    return out


def conjugacy_classes(group: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND):
    """All conjugacy classes, labelled deterministically.

    Classes are sorted by (element order, lex-least representative) and
    labelled ``1A, 2A, 2B, 3A, ...`` with the letter counting classes of
    the same element order.
    """
    elems = group.elements(bound)
    unassigned = set(elems)
    raw = []
    for e in elems:
        if e not in unassigned:
            continue
        orbit = {e}
        queue = [e]
        while queue:
            x = queue.pop()
            for g in group.generators:
                y = x.conjugate(g)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        unassigned -= orbit
        raw.append(orbit)
    raw.sort(key=lambda orbit: (next(iter(orbit)).order(), min(orbit).images))
    classes = []
    per_order: dict[int, int] = {}
    for orbit in raw:
        rep = min(orbit)
        order = rep.order()
        k = per_order.get(order, 0)
        per_order[order] = k + 1
        classes.append(
            ConjugacyClass(
                label=f"{order}{_letters(k)}",
                representative=rep,
                size=len(orbit),
                element_order=order,
                elements=frozenset(orbit),
            )
        )
    return tuple(classes)


def class_of(group: PermGroup, g: Permutation, bound: int = DEFAULT_ENUMERATION_BOUND) -> ConjugacyClass:
    if g not in group:
        raise ValueError(f"{g.cycle_string()} is not a member of {group!r}")
    for cls in group.conjugacy_classes(bound):
        if g in cls:
            return cls
    raise AssertionError("classes do not cover the group")


def class_by_label(group: PermGroup, label: str, bound: int = DEFAULT_ENUMERATION_BOUND) -> ConjugacyClass:
    for cls in group.conjugacy_classes(bound):
        if cls.label == label:
            return cls
    known = ", ".join(c.label for c in group.conjugacy_classes(bound))
    raise ValueError(f"no class labelled {label!r}; classes are {known}")


def is_rational_class(group: PermGroup, cls: ConjugacyClass) -> bool:
    """True iff the class is closed under g -> g^n for every n prime to the order.

    Power maps commute with conjugation, so checking one representative
    settles the whole class.
    """
    rep = cls.representative
    o = cls.element_order
    return all(rep**n in cls.elements for n in range(1, o) if gcd(n, o) == 1)


def centralizer_order(group: PermGroup, g: Permutation, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    if g not in group:
        raise ValueError(f"{g.cycle_string()} is not a member of {group!r}")
    return sum(1 for e in group.elements(bound) if e * g == g * e)


def generates(group: PermGroup, perms, bound: int = DEFAULT_ENUMERATION_BOUND) -> bool:
    """True iff the given members generate the whole group."""
    perms = list(perms)
    for p in perms:
        if p not in group:
            raise ValueError(f"{p.cycle_string()} is not a member of {group!r}")
    return PermGroup(perms, group.degree).order == group.order
