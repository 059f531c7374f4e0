"""Named groups and the text grammar the CLI accepts.

A group spec is either a catalogue name or an explicit generator list:

    S5  A6  D4  Q8  Z/12  Z/6xZ/2  Z/2xZ/2xZ/3
    gens:(1 2)(3 4);(1 3)(2 4)        (needs an explicit degree)

Generator words are separated by semicolons or by commas outside
parentheses; commas inside a cycle separate points.

Catalogue names resolve to fixed generator sets (documented in the
README) so that class labels and canonical forms are reproducible.
Products of cyclic factors act on disjoint blocks, one regular cycle
per factor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .permgroup import PermGroup
from .permutation import Permutation, parse_cycles


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("S_n needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1)
    gens = [parse_cycles("(1 2)", n)]
    if n > 2:
        gens.append(Permutation(list(range(1, n)) + [0]))
    return PermGroup(gens, degree=n)


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    if n <= 2:
        return PermGroup([], degree=n)
    if n == 3:
        return PermGroup([parse_cycles("(1 2 3)", 3)], degree=3)
    three = parse_cycles("(1 2 3)", n)
    if n % 2:
        big = Permutation(list(range(1, n)) + [0])
    else:
        big = Permutation([0] + list(range(2, n)) + [1])
    return PermGroup([three, big], degree=n)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("Z/n needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1)
    return PermGroup([Permutation(list(range(1, n)) + [0])], degree=n)


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon on n points, order 2n.  Needs n >= 3."""
    if n < 3:
        raise ValueError("D_n needs n >= 3 to act faithfully on n points")
    rotation = Permutation(list(range(1, n)) + [0])
    reflection = Permutation([(n - i) % n for i in range(n)])
    return PermGroup([rotation, reflection], degree=n)


def quaternion8() -> PermGroup:
    i = parse_cycles("(1 2 3 4)(5 6 7 8)", 8)
    j = parse_cycles("(1 5 3 7)(2 8 4 6)", 8)
    return PermGroup([i, j], degree=8)


def direct_product(factors) -> PermGroup:
    """Factors act on consecutive disjoint blocks of points."""
    factors = list(factors)
    degree = sum(f.degree for f in factors)
    gens = []
    offset = 0
    for f in factors:
        for g in f.generators:
            images = list(range(degree))
            for p, q in enumerate(g.images):
                images[offset + p] = offset + q
            gens.append(Permutation(images))
        offset += f.degree
    return PermGroup(gens, degree=degree)


@dataclass(frozen=True)
class GroupSpec:
    """A resolved group spec: the canonical display name and the group."""

    name: str
    group: PermGroup


_ATOM = re.compile(r"^(S|A|D)(\d+)$|^Q8$|^Z/(\d+)$")


def _parse_atom(token: str) -> PermGroup:
    m = _ATOM.match(token)
    if m is None:
        raise ValueError(f"unknown catalogue name {token!r}")
    if token == "Q8":
        return quaternion8()
    if m.group(3) is not None:
        return cyclic(int(m.group(3)))
    family, n = m.group(1), int(m.group(2))
    if family == "S":
        return symmetric(n)
    if family == "A":
        return alternating(n)
    return dihedral(n)


def _split_generator_words(payload: str) -> list[str]:
    """Split on ';' anywhere and on ',' outside parentheses."""
    words, buf, depth = [], [], 0
    for ch in payload:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(depth - 1, 0)
        if ch == ";" or (ch == "," and depth == 0):
            words.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    words.append("".join(buf))
    return words


def parse_group_spec(spec: str, degree: int | None = None) -> GroupSpec:
    """Resolve a group spec string; see the module docstring for the grammar."""
    spec = spec.strip()
    if spec.startswith("gens:"):
        if degree is None:
            raise ValueError("explicit generators need --degree")
        words = [w for w in _split_generator_words(spec[len("gens:") :]) if w.strip()]
        if not words:
            raise ValueError("empty generator list")
        gens = [parse_cycles(w, degree) for w in words]
        name = "gens:" + ";".join(g.cycle_string() for g in gens)
        return GroupSpec(name, PermGroup(gens, degree=degree))
    tokens = spec.split("x")
    groups = [_parse_atom(t.strip()) for t in tokens]
    name = "x".join(t.strip() for t in tokens)
    group = groups[0] if len(groups) == 1 else direct_product(groups)
    if degree is not None and degree != group.degree:
        raise ValueError(
            f"--degree {degree} conflicts with {name} acting on {group.degree} points"
        )
    return GroupSpec(name, group)
