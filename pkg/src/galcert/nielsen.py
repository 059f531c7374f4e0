"""Product-one generating tuples, rigidity, and the braid action.

The objects counted here are r-tuples (g_1, ..., g_r) with product equal
to the identity, taken modulo simultaneous conjugation.  Three flavours
appear:

* tuples whose entries generate the group (identity entries allowed),
* the same with identity entries forbidden,
* tuples confined to a fixed vector of conjugacy classes.

A class vector is rigid when exactly one orbit survives.  The
certificate bundles that count with the conditions a realization
argument actually consumes: every class rational and nontrivial, and
the centre trivial.

Orbits are represented canonically: the entrywise-least image tuple
over all simultaneous conjugations, encoded as bytes.  Enumeration
fixes g_1 to a class representative, so only centralizer conjugations
can identify two enumerated tuples; the global canonical form is
computed once per surviving orbit.

The braid generator sigma_i twists adjacent entries,

    sigma_i: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i)

which preserves the product, the generated subgroup and the multiset of
classes, and satisfies the braid relations on raw tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceeded
from .permgroup import ConjugacyClass, PermGroup, is_rational_class
from .permutation import Permutation

DEFAULT_TUPLE_BUDGET = 5_000_000


def _conjugated_images(g: tuple, h: tuple) -> tuple:
    """Image tuple of h^-1 g h, computed without building Permutations."""
    out = [0] * len(g)
    for x, hx in enumerate(h):
        out[hx] = h[g[x]]
    return tuple(out)


def _least_conjugate(entries: tuple, conjugators) -> tuple:
    """Entrywise-least simultaneous conjugate of an image-tuple vector."""
    best = None
    for h in conjugators:
        candidate = tuple(_conjugated_images(g, h) for g in entries)
        if best is None or candidate < best:
            best = candidate
    return best


def _key_bytes(entry_images) -> bytes:
    return bytes(x for img in entry_images for x in img)


class NielsenTuple:
    """A product-one tuple up to simultaneous conjugation.

    ``entries`` hold the canonical representative; ``canonical_key`` is
    its byte encoding, identical for conjugate tuples.
    """

    __slots__ = ("group", "entries", "canonical_key")

    def __init__(self, group: PermGroup, entries):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty tuple")
        if group.degree > 255:
            raise ValueError("canonical keys support degree <= 255")
        prod = Permutation.identity(group.degree)
        for e in entries:
            if e.degree != group.degree:
                raise ValueError("degree mismatch")
            prod = prod * e
        if not prod.is_identity():
            raise ValueError("entries do not multiply to the identity")
        conjugators = [h.images for h in group.elements()]
        least = _least_conjugate(tuple(e.images for e in entries), conjugators)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "entries", tuple(Permutation(img) for img in least))
        object.__setattr__(self, "canonical_key", _key_bytes(least))

    def __setattr__(self, name, value):
        raise AttributeError("NielsenTuple is immutable")

    @property
    def r(self) -> int:
        return len(self.entries)

    def cycle_strings(self) -> tuple[str, ...]:
        return tuple(e.cycle_string() for e in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NielsenTuple)
            and self.canonical_key == other.canonical_key
            and self.group.degree == other.group.degree
        )

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def __repr__(self) -> str:
        return f"NielsenTuple({', '.join(self.cycle_strings())})"


@dataclass(frozen=True)
class ClassVector:
    """An ordered vector of conjugacy classes of one group."""

    group: PermGroup
    classes: tuple[ConjugacyClass, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def braid_move(entries, i: int, inverse: bool = False):
    """Apply sigma_i (1-based, twisting positions i and i+1) to raw entries."""
    entries = tuple(entries)
    if not 1 <= i <= len(entries) - 1:
        raise ValueError(f"braid index {i} out of range 1..{len(entries) - 1}")
    a, b = entries[i - 1], entries[i]
    if inverse:
        pair = (b, b.inverse() * a * b)
    else:
        pair = (a * b * a.inverse(), a)
    return entries[: i - 1] + pair + entries[i + 1 :]


def braid_generator_action(t: NielsenTuple, i: int, inverse: bool = False) -> NielsenTuple:
    return NielsenTuple(t.group, braid_move(t.entries, i, inverse))


def _centralizer_images(group: PermGroup, rep: Permutation):
    return [h.images for h in group.elements() if h * rep == rep * h]


def _class_index_table(group: PermGroup):
    table = {}
    for idx, cls in enumerate(group.conjugacy_classes()):
        for e in cls.elements:
            table[e] = idx
    return table


def _suffix_class_sets(group: PermGroup, classes):
    """suffix[k] = indices of classes met by products from classes[k:].

    Products drawn one element per class form a union of conjugacy
    classes, and replacing every factor but the last by a fixed
    representative of its class reaches the same union.
    """
    table = _class_index_table(group)
    all_classes = group.conjugacy_classes()
    suffix = [None] * (len(classes) + 1)
    identity_idx = table[Permutation.identity(group.degree)]
    suffix[len(classes)] = {identity_idx}
    for k in range(len(classes) - 1, -1, -1):
        rep = classes[k].representative
        reachable = set()
        for idx in suffix[k + 1]:
            for y in all_classes[idx].elements:
                reachable.add(table[rep * y])
        suffix[k] = reachable
    return suffix, table


def enumerate_nielsen(
    group: PermGroup,
    classes,
    budget: int = DEFAULT_TUPLE_BUDGET,
    threads: int = 1,
) -> tuple[NielsenTuple, ...]:
    """Orbit representatives of product-one generating tuples with g_i in classes[i].

    Deterministic: orbits come back sorted by canonical key.  Raises
    BudgetExceeded if the raw search space (everything left free after
    fixing g_1 and forcing g_r) outgrows the budget.
    """
    if isinstance(classes, ClassVector):
        if classes.group is not group:
            raise ValueError("class vector belongs to a different group")
        classes = classes.classes
    classes = tuple(classes)
    if len(classes) < 2:
        raise ValueError("a class vector needs at least two classes")
    for c in classes:
        if c.representative not in group:
            raise ValueError(f"class {c.label} does not live in {group!r}")

    work = 1
    for c in classes[1:-1]:
        work *= c.size
    if work > budget:
        raise BudgetExceeded("class vector enumeration", work, budget)

    suffix, class_table = _suffix_class_sets(group, classes)
    last_index = class_table[classes[-1].representative]
    rep = classes[0].representative
    centralizer = _centralizer_images(group, rep)
    pools = [sorted(c.elements) for c in classes[1:-1]]

    slice_reps = {}
    for middle in product(*pools):
        partial = rep
        feasible = True
        for k, g in enumerate(middle, start=1):
            partial = partial * g
            if class_table[partial.inverse()] not in suffix[k + 1]:
                feasible = False
                break
        if not feasible:
            continue
        last = partial.inverse()
        if class_table[last] != last_index:
            continue
        entries = (rep,) + middle + (last,)
        if PermGroup(entries, group.degree).order != group.order:
            continue
        least = _least_conjugate(tuple(e.images for e in entries), centralizer)
        slice_reps.setdefault(_key_bytes(least), least)

    tuples = _canonical_batch(group, slice_reps.values(), threads)
    return tuple(sorted(tuples, key=lambda t: t.canonical_key))


def _canonical_batch(group, entry_vectors, threads):
    from .parallel import ordered_map

    def build(vec):
        return NielsenTuple(group, (Permutation(img) for img in vec))

    return list(ordered_map(build, list(entry_vectors), threads))


def enumerate_ni_star(
    group: PermGroup,
    r: int,
    allow_identity: bool = True,
    budget: int = DEFAULT_TUPLE_BUDGET,
    threads: int = 1,
) -> tuple[NielsenTuple, ...]:
    """Orbit representatives of all product-one generating r-tuples.

    With ``allow_identity=False`` this is the identity-free variant.
    The search is sliced by the class of g_1 (fixed to the class
    representative), which leaves only centralizer conjugations to
    identify tuples inside one slice.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    classes = group.conjugacy_classes()
    elems = group.elements()
    pool = [e for e in elems if allow_identity or not e.is_identity()]

    slices = [c for c in classes if allow_identity or c.element_order > 1]
    work = len(slices) * max(1, len(pool)) ** max(0, r - 2)
    if work > budget:
        raise BudgetExceeded("tuple enumeration", work, budget)

    found = {}
    for cls in slices:
        rep = cls.representative
        centralizer = _centralizer_images(group, rep)
        for middle in product(pool, repeat=r - 2) if r >= 2 else [()]:
            if r == 1:
                entries = (rep,)
                if not rep.is_identity():
                    continue
            else:
                partial = rep
                for g in middle:
                    partial = partial * g
                last = partial.inverse()
                if not allow_identity and last.is_identity():
                    continue
                entries = (rep,) + middle + (last,)
            subgroup = PermGroup(entries, group.degree)
            if subgroup.order != group.order:
                continue
            least = _least_conjugate(tuple(e.images for e in entries), centralizer)
            found.setdefault(_key_bytes(least), least)

    tuples = _canonical_batch(group, found.values(), threads)
    return tuple(sorted(tuples, key=lambda t: t.canonical_key))


def is_rigid(group: PermGroup, classes, budget: int = DEFAULT_TUPLE_BUDGET) -> bool:
    """True iff exactly one orbit of product-one generating tuples exists."""
    return len(enumerate_nielsen(group, classes, budget)) == 1


@dataclass(frozen=True)
class RigidityCertificate:
    """Everything a realization argument wants to see in one record."""

    labels: tuple[str, ...]
    count: int
    rigid: bool
    rational_flags: tuple[bool, ...]
    nontrivial_flags: tuple[bool, ...]
    centre_trivial: bool
    positive: bool
    witness: NielsenTuple | None
    orbits: tuple[NielsenTuple, ...]

    @property
    def verdict(self) -> str:
        return "positive" if self.positive else "negative"


def rigidity_certificate(
    group: PermGroup,
    classes,
    budget: int = DEFAULT_TUPLE_BUDGET,
    threads: int = 1,
) -> RigidityCertificate:
    """Certify a class vector: rigid + rational + nontrivial + trivial centre."""
    classes = tuple(classes)
    orbits = enumerate_nielsen(group, classes, budget, threads)
    rigid = len(orbits) == 1
    rational = tuple(is_rational_class(group, c) for c in classes)
    nontrivial = tuple(c.element_order > 1 for c in classes)
    centre_trivial = group.centre_order() == 1
    positive = rigid and all(rational) and all(nontrivial) and centre_trivial
    return RigidityCertificate(
        labels=tuple(c.label for c in classes),
        count=len(orbits),
        rigid=rigid,
        rational_flags=rational,
        nontrivial_flags=nontrivial,
        centre_trivial=centre_trivial,
        positive=positive,
        witness=orbits[0] if rigid else None,
        orbits=orbits,
    )


@dataclass(frozen=True)
class BraidOrbit:
    representative: NielsenTuple
    size: int
    class_multiset: tuple[str, ...]


@dataclass(frozen=True)
class BraidOrbitReport:
    r: int
    tuple_count: int
    orbits: tuple[BraidOrbit, ...]


def braid_orbits(group: PermGroup, tuples) -> BraidOrbitReport:
    """Partition a braid-closed set of orbit representatives.

    The given tuples must be closed under every sigma_i (ni_r and its
    class-multiset slices are); a move escaping the set is a bug and
    raises.
    """
    tuples = list(tuples)
    universe = {t.canonical_key: t for t in tuples}
    if len(universe) != len(tuples):
        raise ValueError("duplicate tuples in braid orbit input")
    r = tuples[0].r if tuples else 0
    label_of = {}
    for cls in group.conjugacy_classes():
        for e in cls.elements:
            label_of[e] = cls.label

    seen = set()
    orbits = []
    for start in sorted(tuples, key=lambda t: t.canonical_key):
        if start.canonical_key in seen:
            continue
        component = {start.canonical_key}
        queue = [start]
        while queue:
            t = queue.pop()
            for i in range(1, r):
                for inverse in (False, True):
                    image = braid_generator_action(t, i, inverse)
                    if image.canonical_key not in universe:
                        raise ValueError("input set is not closed under the braid action")
                    if image.canonical_key not in component:
                        component.add(image.canonical_key)
                        queue.append(universe[image.canonical_key])
        seen |= component
        multiset = tuple(sorted(label_of[e] for e in start.entries))
        orbits.append(BraidOrbit(representative=start, size=len(component), class_multiset=multiset))
    return BraidOrbitReport(r=r, tuple_count=len(tuples), orbits=tuple(orbits))
