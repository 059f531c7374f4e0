"""Permutations of {0, ..., degree-1} with a fixed composition convention.

Everything downstream (tuple enumeration, braid moves, Cayley tables)
depends on one choice that the literature never agrees on, so it is
pinned here once: products compose LEFT TO RIGHT,

    (p * q)(x) = q(p(x))

i.e. ``p * q`` means "apply p first, then q", and a cycle word like
``(1 2)(2 3)`` is the transposition (1 2) followed by (2 3), which is
the 3-cycle sending 1 -> 3 -> 2 -> 1.  Conjugation is ``g^h = h^-1 g h``,
so conjugating permutes cycle entries by h: if g maps a -> b then g^h
maps h(a) -> h(b).

Points are 0-based internally; the text syntax ``(1 2)(3 4 5)`` is
1-based, matching how such permutations are usually written down.
"""

from __future__ import annotations

from functools import total_ordering


@total_ordering
class Permutation:
    """Immutable permutation stored as the tuple of images of 0..n-1."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: apply self first, then other."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation(o[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, h: "Permutation") -> "Permutation":
        """self^h = h^-1 * self * h."""
        return h.inverse() * self * h

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, 0-based."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending."""
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd."""
        transpositions = sum(len(c) - 1 for c in self.cycles())
        return -1 if transpositions % 2 else 1

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation, '()' for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation.parse({self.cycle_string()!r}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    @staticmethod
    def parse(text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a 1-based cycle word like ``(1 2)(3 4 5)``.

    Cycles in the word need not be disjoint; they are applied left to
    right, so ``(1 2)(2 3)`` is the 3-cycle sending 1 -> 3.  Commas and
    whitespace both separate points.  The empty word and ``()`` give the
    identity.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    stripped = text.replace(",", " ").strip()
    result = Permutation.identity(degree)
    pos = 0
    saw_any = False
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        if stripped[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        end = stripped.find(")", pos)
        if end < 0:
            raise ValueError(f"unclosed cycle in {text!r}")
        body = stripped[pos + 1 : end].split()
        pos = end + 1
        saw_any = True
        if not body:
            continue
        try:
            points = [int(tok) - 1 for tok in body]
        except ValueError:
            raise ValueError(f"non-integer point in {text!r}") from None
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point inside one cycle in {text!r}")
        for p in points:
            if not 0 <= p < degree:
                raise ValueError(f"point {p + 1} out of range 1..{degree} in {text!r}")
        images = list(range(degree))
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
        result = result * Permutation(images)
    if not saw_any and stripped:
        raise ValueError(f"cannot parse {text!r}")
    return result
