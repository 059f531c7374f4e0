"""Exact arithmetic in rings of cyclotomic integers.

Z[zeta_m] is modeled as Z[x] modulo the m-th cyclotomic polynomial,
with elements stored as integer coefficient vectors on the power basis
1, zeta, ..., zeta^(phi(m)-1).  Norms are determinants of
multiplication matrices, computed fraction-free so everything stays in
exact integer arithmetic; Python's unbounded ints make overflow a
non-issue.  ``norm_search`` sweeps a coefficient box looking for an
element of prescribed norm, which is the workhorse behind the rational
cyclic-group criterion.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceeded

_CYCLOTOMIC_CACHE: dict[int, tuple[int, ...]] = {}

DEFAULT_NORM_BOUND = 3
DEFAULT_NORM_BUDGET = 200_000


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num, den):
    """Long division in Z[x] by a monic divisor; exact integer steps."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    num = list(num)
    quot = [0] * max(1, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            quot[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[m]
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    quot, rem = _poly_divmod(num, den)
    if any(rem) and rem != [0]:
        raise AssertionError("cyclotomic division left a remainder")
    out = tuple(quot)
    _CYCLOTOMIC_CACHE[m] = out
    return out


def _det_bareiss(mat) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


class CyclotomicInt:
    """An element of Z[zeta_m] on the power basis of zeta_m."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        phi = len(cyclotomic_poly(conductor)) - 1
        coeffs = list(coeffs)
        if len(coeffs) > phi:
            raise ValueError(f"at most {phi} coefficients for conductor {conductor}")
        coeffs += [0] * (phi - len(coeffs))
        self.conductor = conductor
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CyclotomicInt":
        phi = len(cyclotomic_poly(conductor)) - 1
        power %= conductor
        raw = [0] * (power + 1)
        raw[power] = 1
        _, rem = _poly_divmod(raw, list(cyclotomic_poly(conductor)))
        rem += [0] * (phi - len(rem))
        return cls(conductor, rem[:phi])

    @classmethod
    def integer(cls, conductor: int, value: int) -> "CyclotomicInt":
        return cls(conductor, [value])

    def _check(self, other):
        if not isinstance(other, CyclotomicInt):
            other = CyclotomicInt.integer(self.conductor, int(other))
        if other.conductor != self.conductor:
            raise ValueError("conductor mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicInt(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._check(other)
        return CyclotomicInt(self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicInt(self.conductor, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._check(other)
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        _, rem = _poly_divmod(prod, list(cyclotomic_poly(self.conductor)))
        return CyclotomicInt(self.conductor, rem[: len(self.coeffs)])

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicInt)
            and self.conductor == other.conductor
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def norm(self) -> int:
        """Field norm down to Q: determinant of multiplication by self."""
        phi = len(self.coeffs)
        cols = []
        phi_poly = list(cyclotomic_poly(self.conductor))
        current = list(self.coeffs)
        for _ in range(phi):
            cols.append(list(current))
            current = [0] + current
            _, current = _poly_divmod(current, phi_poly)
            current += [0] * (phi - len(current))
            current = current[:phi]
        mat = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        return _det_bareiss(mat)

    def __repr__(self):
        return f"CyclotomicInt({self.conductor}, {list(self.coeffs)})"


def norm_search(
    conductor: int,
    target: int,
    bound: int = DEFAULT_NORM_BOUND,
    budget: int = DEFAULT_NORM_BUDGET,
):
    """First element of Z[zeta_m] with norm +-target in the coefficient
    box [-bound, bound]^phi, sweeping lexicographically; None when the
    box holds no witness.  The box size is checked against the budget
    before any work happens."""
    if target <= 0:
        raise ValueError("target must be a positive integer")
    phi = len(cyclotomic_poly(conductor)) - 1
    total = (2 * bound + 1) ** phi
    if total > budget:
        raise BudgetExceeded("norm search box", total, budget)
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=phi):
        if not any(coeffs):
            continue
        elem = CyclotomicInt(conductor, coeffs)
        if abs(elem.norm()) == target:
            return elem
    return None
