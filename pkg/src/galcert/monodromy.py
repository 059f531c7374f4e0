"""Ramification data for covers of the line and their permutation models.

A datum lists the degree and one cycle-type partition per branch point.
It is realizable when permutations with exactly those cycle types
multiply to the identity and generate a transitive group; the target
can be tightened to the full symmetric or the alternating group.

Two cheap global invariants come first: the parity obstruction (the
signs of the prescribed types must multiply to +1, since they multiply
to the sign of the identity) and the genus of the covering curve,

    2g - 2 = -2n + sum over all parts e of (e - 1),

which is reported as computed, integral or not, feasible or not.

The search is exhaustive on a conjugation slice: g_1 is pinned to the
least element of its type, the last entry is forced by the product
condition, and every predicate in play is conjugation invariant, so an
empty slice proves nonexistence rather than bad luck.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial

from .catalogue import symmetric
from .errors import BudgetExceeded
from .nielsen import DEFAULT_TUPLE_BUDGET
from .permgroup import PermGroup
from .permutation import Permutation

DEGREE_BOUND = 8

TARGETS = ("any", "full_symmetric", "alternating")


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths of p including fixed points, sorted descending."""
    return p.cycle_type()


def signature(p: Permutation) -> int:
    """The sign morphism to {+1, -1}."""
    return p.sign()


@dataclass(frozen=True)
class RamificationDatum:
    """Degree plus one partition (cycle type) per branch point."""

    degree: int
    branch_types: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if not self.branch_types:
            raise ValueError("a datum needs at least one branch point")
        for t in self.branch_types:
            if any(part < 1 for part in t):
                raise ValueError(f"partition parts must be >= 1: {t}")
            if sum(t) != self.degree:
                raise ValueError(f"partition {t} does not sum to degree {self.degree}")
            if tuple(sorted(t, reverse=True)) != t:
                raise ValueError(f"partition {t} must be sorted descending")

    @staticmethod
    def parse(text: str, degree: int | None = None) -> "RamificationDatum":
        """Parse ``"4;3,1;2,1,1"``; the degree is the common partition sum."""
        parts = [p.strip() for p in text.split(";") if p.strip()]
        if not parts:
            raise ValueError("empty datum")
        types = []
        for p in parts:
            try:
                t = tuple(sorted((int(tok) for tok in p.split(",")), reverse=True))
            except ValueError:
                raise ValueError(f"bad partition {p!r}") from None
            types.append(t)
        inferred = sum(types[0])
        if degree is not None and degree != inferred:
            raise ValueError(f"--degree {degree} conflicts with partition sum {inferred}")
        return RamificationDatum(inferred, tuple(types))

    @property
    def branch_count(self) -> int:
        return len(self.branch_types)

    def total_ramification(self) -> int:
        return sum(e - 1 for t in self.branch_types for e in t)

    def genus(self):
        """Genus of the covering curve; an int when the datum is consistent."""
        doubled = self.total_ramification() - 2 * self.degree + 2
        return doubled // 2 if doubled % 2 == 0 else doubled / 2

    def as_text(self) -> str:
        return ";".join(",".join(str(e) for e in t) for t in self.branch_types)


def parity_obstruction(datum: RamificationDatum) -> bool:
    """True when the prescribed signs cannot multiply to +1."""
    return datum.total_ramification() % 2 == 1


@dataclass(frozen=True)
class RealizationResult:
    status: str  # "realized" | "none" | "unknown"
    witness: tuple[Permutation, ...] | None
    witness_group_order: int | None
    parity_ok: bool
    genus: object

    @property
    def realized(self) -> bool:
        return self.status == "realized"


def _target_accepts(target: str, group: PermGroup, entries) -> bool:
    n = group.degree
    if target == "full_symmetric":
        return group.order == factorial(n)
    if target == "alternating":
        return group.order * 2 == factorial(n) and all(e.sign() == 1 for e in entries)
    return group.is_transitive()


def realize_datum(
    datum: RamificationDatum,
    target: str = "any",
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> RealizationResult:
    """Search for a product-one tuple with the datum's cycle types.

    Three-valued: a witness, a proof of none (the slice search is
    exhaustive and parity fires early), or unknown on budget overflow.
    """
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}")
    if datum.degree > DEGREE_BOUND:
        raise BudgetExceeded("realization degree", datum.degree, DEGREE_BOUND)
    genus = datum.genus()
    if parity_obstruction(datum):
        return RealizationResult("none", None, None, parity_ok=False, genus=genus)

    n = datum.degree
    ambient = symmetric(n)
    elems = ambient.elements()
    pools = [
        sorted(e for e in elems if e.cycle_type() == t) for t in datum.branch_types
    ]

    if datum.branch_count == 1:
        # the single entry must be the identity
        entries = (Permutation.identity(n),)
        if datum.branch_types[0] == (1,) * n and _target_accepts(
            target, PermGroup(entries, n), entries
        ):
            return RealizationResult("realized", entries, 1, True, genus)
        return RealizationResult("none", None, None, True, genus)

    work = 1
    for pool in pools[1:-1]:
        work *= len(pool)
    if work > budget:
        return RealizationResult("unknown", None, None, True, genus)

    first = pools[0][0]
    last_type = datum.branch_types[-1]
    for middle in product(*pools[1:-1]):
        partial = first
        for g in middle:
            partial = partial * g
        last = partial.inverse()
        if last.cycle_type() != last_type:
            continue
        entries = (first,) + middle + (last,)
        group = PermGroup(entries, n)
        if _target_accepts(target, group, entries):
            return RealizationResult("realized", entries, group.order, True, genus)
    return RealizationResult("none", None, None, True, genus)


def recognize_symmetric_by_transpositions(group: PermGroup) -> bool:
    """True iff the transpositions inside the group generate it, it is
    transitive, and it has full symmetric order."""
    n = group.degree
    transpositions = []
    for i in range(n):
        for j in range(i + 1, n):
            images = list(range(n))
            images[i], images[j] = j, i
            t = Permutation(images)
            if t in group:
                transpositions.append(t)
    if not transpositions:
        return False
    generated = PermGroup(transpositions, n)
    return (
        generated.order == group.order
        and group.is_transitive()
        and group.order == factorial(n)
    )


def is_self_normalizing(group: PermGroup) -> bool:
    """True iff no element outside the group normalizes it (inside the
    full symmetric group on its points).  Exhaustive; degree capped."""
    n = group.degree
    if n > DEGREE_BOUND:
        raise BudgetExceeded("normalizer search degree", n, DEGREE_BOUND)
    gens = group.generators
    for h in symmetric(n).elements():
        if h in group:
            continue
        if all(s.conjugate(h) in group for s in gens):
            return False
    return True
