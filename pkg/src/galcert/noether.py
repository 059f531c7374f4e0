"""Rationality criteria for the fixed field of a cyclic permutation
action, i.e. Noether's problem for Z/n over the rationals.

Two independent tests are provided.  ``plans_condition`` is a pure
divisibility check against a fixed finite list of admissible prime
powers.  ``lenstra_condition`` mechanizes the sharper criterion: the
answer is negative when 8 divides n, and positive exactly when every
prime p dividing n admits an element of norm +-p in Z[zeta_m] for
m = (p-1) * p^(s-1), s the multiplicity of p in n.  Existence is
established by a bounded search, so the verdict is three-valued: a
witness settles a prime positively, but an exhausted search box proves
nothing and the overall answer degrades to "unknown" rather than
guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import (
    DEFAULT_NORM_BOUND,
    DEFAULT_NORM_BUDGET,
    CyclotomicInt,
    cyclotomic_poly,
    norm_search,
)
from .errors import BudgetExceeded

RATIONAL = "rational"
NOT_RATIONAL = "not_rational"
UNKNOWN = "unknown"

# prime powers allowed to divide n: unbounded powers of 3, squares at
# 2, 5, 7, first powers for the rest
_PLANS_CAPS = {2: 2, 3: None, 5: 2, 7: 2}
_PLANS_SINGLE = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 67, 71}


@dataclass(frozen=True)
class NormWitness:
    """An element of Z[zeta_conductor] whose norm is +-prime."""

    prime: int
    conductor: int
    coeffs: tuple[int, ...]
    norm: int

    def element(self) -> CyclotomicInt:
        return CyclotomicInt(self.conductor, self.coeffs)


@dataclass(frozen=True)
class NoetherVerdict:
    n: int
    status: str
    witnesses: tuple[NormWitness, ...]
    reasons: tuple[str, ...]


def _factorize(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            s = 0
            while n % d == 0:
                n //= d
                s += 1
            out.append((d, s))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def plans_condition(n: int) -> bool:
    """Divisibility test against the fixed admissible prime-power list."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    for p, s in _factorize(n):
        if p in _PLANS_CAPS:
            cap = _PLANS_CAPS[p]
            if cap is not None and s > cap:
                return False
        elif p in _PLANS_SINGLE:
            if s > 1:
                return False
        else:
            return False
    return True


def lenstra_condition(
    n: int,
    bound: int = DEFAULT_NORM_BOUND,
    budget: int = DEFAULT_NORM_BUDGET,
) -> NoetherVerdict:
    """Three-valued rationality verdict for the cyclic group of order n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n % 8 == 0:
        return NoetherVerdict(
            n, NOT_RATIONAL, (), ("8 divides n, which forces a negative answer",)
        )
    witnesses = []
    reasons = []
    status = RATIONAL
    for p, s in _factorize(n):
        m = (p - 1) * p ** (s - 1)
        if m <= 2:
            # the cyclotomic ring collapses to Z, where p is its own norm
            witnesses.append(NormWitness(p, m, (p,), p))
            reasons.append(f"p={p}: conductor {m} gives the ring Z, witness {p} is immediate")
            continue
        phi = len(cyclotomic_poly(m)) - 1
        try:
            elem = norm_search(m, p, bound=bound, budget=budget)
        except BudgetExceeded as exc:
            status = UNKNOWN
            reasons.append(
                f"p={p}: coefficient box [-{bound}, {bound}]^{phi} of Z[zeta_{m}]"
                f" has {exc.needed} points, over the budget of {exc.limit};"
                " existence undecided"
            )
            continue
        if elem is None:
            status = UNKNOWN
            reasons.append(
                f"p={p}: no element of norm +-{p} in the coefficient box"
                f" [-{bound}, {bound}]^{phi} of Z[zeta_{m}]; existence undecided"
            )
            continue
        witnesses.append(NormWitness(p, m, elem.coeffs, elem.norm()))
    return NoetherVerdict(n, status, tuple(witnesses), tuple(reasons))
