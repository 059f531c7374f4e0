"""Exact linear algebra over Z/p^e.

Everything downstream of the cohomology engine reduces to three
questions about row vectors modulo a prime power: what is the kernel of
a matrix, what does a quotient of spans look like, and does a vector
lie in a span.  Over Z/p^e plain Gaussian elimination is wrong (2 is
not invertible mod 4), but picking the pivot of globally minimal p-adic
valuation makes every elimination step exact: all other entries in the
pivot's row and column are divisible by it.

``diagonalize`` runs that pivoting to completion while tracking the
column transform and its inverse, which is all the structure the kernel
and quotient routines need.  All matrices are int64 numpy arrays with
entries reduced modulo p^e; the moduli here never exceed 64, so nothing
approaches overflow.
"""

from __future__ import annotations

import numpy as np


def valuations(a, p: int, e: int):
    """Elementwise p-adic valuation, with val(0) = e."""
    a = np.asarray(a)
    v = np.full(a.shape, e, dtype=np.int64)
    rem = a.copy()
    mask = rem != 0
    val = 0
    while np.any(mask) and val < e:
        stops = mask & (rem % p != 0)
        v[stops] = val
        mask &= ~stops
        rem = np.where(mask, rem // p, rem)
        val += 1
    return v


def diagonalize(a, p: int, e: int, want_q: bool = False, want_qinv: bool = False):
    """Bring ``a`` to diagonal form p^k by row and column operations.

    Returns (exponents, Q, Qinv): exponents[i] is the valuation of the
    i-th diagonal pivot; with the tracked transforms, original_rows * Q
    runs through the same column operations, and Qinv undoes them.  Row
    operations are not tracked since no caller needs them.
    """
    q = p**e
    a = np.array(a, dtype=np.int64) % q
    rows, cols = a.shape
    qmat = np.eye(cols, dtype=np.int64) if want_q else None
    qinv = np.eye(cols, dtype=np.int64) if want_qinv else None
    exps = []
    r = 0
    limit = min(rows, cols)
    while r < limit:
        sub = a[r:, r:]
        if not sub.any():
            break
        vals = valuations(sub, p, e)
        vals[sub == 0] = e + 1
        flat = int(np.argmin(vals))
        i, j = divmod(flat, cols - r)
        pivot_val = int(vals[i, j])
        i += r
        j += r
        if i != r:
            a[[r, i]] = a[[i, r]]
        if j != r:
            a[:, [r, j]] = a[:, [j, r]]
            if want_q:
                qmat[:, [r, j]] = qmat[:, [j, r]]
            if want_qinv:
                qinv[[r, j]] = qinv[[j, r]]
        pk = p**pivot_val
        unit = (int(a[r, r]) // pk) % q
        a[r] = (a[r] * pow(unit, -1, q)) % q
        # clear the pivot column with row operations
        col = a[:, r].copy()
        col[r] = 0
        coefs = col // pk
        nz = coefs.nonzero()[0]
        if nz.size:
            a[nz] = (a[nz] - np.outer(coefs[nz], a[r])) % q
        # clear the pivot row with column operations, mirrored into Q
        row = a[r].copy()
        row[r] = 0
        ccoefs = row // pk
        nzc = ccoefs.nonzero()[0]
        if nzc.size:
            a[:, nzc] = (a[:, nzc] - np.outer(a[:, r], ccoefs[nzc])) % q
            if want_q:
                qmat[:, nzc] = (qmat[:, nzc] - np.outer(qmat[:, r], ccoefs[nzc])) % q
            if want_qinv:
                qinv[r] = (qinv[r] + ccoefs[nzc] @ qinv[nzc]) % q
        exps.append(pivot_val)
        r += 1
    return exps, qmat, qinv


def kernel(a, p: int, e: int):
    """Rows spanning {v : a @ v = 0} over Z/p^e."""
    a = np.asarray(a, dtype=np.int64)
    q = p**e
    if a.shape[0] == 0:
        return np.eye(a.shape[1], dtype=np.int64)
    exps, qmat, _ = diagonalize(a, p, e, want_q=True)
    gens = []
    for i in range(a.shape[1]):
        if i < len(exps):
            if exps[i] == 0:
                continue
            scale = p ** (e - exps[i])
        else:
            scale = 1
        gens.append((scale * qmat[:, i]) % q)
    if not gens:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    return np.array(gens, dtype=np.int64)


def left_kernel(a, p: int, e: int):
    """Rows spanning {w : w @ a = 0} over Z/p^e."""
    return kernel(np.asarray(a, dtype=np.int64).T, p, e)


def in_span(v, rows, p: int, e: int) -> bool:
    """True iff v lies in the row span of ``rows`` over Z/p^e."""
    v = np.asarray(v, dtype=np.int64)
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        q = p**e
        return not np.any(v % q)
    stacked = np.vstack([v[None, :], rows])
    combos = left_kernel(stacked, p, e)
    if combos.size == 0:
        return False
    return bool(np.any(combos[:, 0] % p != 0))


def quotient(gens_x, gens_y, p: int, e: int):
    """Invariant factors and representatives of span(gens_x)/span(gens_y).

    Requires span(gens_y) to be contained in span(gens_x).  Returns
    (exponents, reps): exponents sorted descending, reps[i] a row of
    gens_x-combinations whose class has order p^exponents[i].
    """
    gens_x = np.asarray(gens_x, dtype=np.int64)
    gens_y = np.asarray(gens_y, dtype=np.int64)
    q = p**e
    nx = gens_x.shape[0]
    if nx == 0:
        return [], np.zeros((0, gens_x.shape[1] if gens_x.ndim == 2 else 0), dtype=np.int64)
    stacked = gens_x if gens_y.size == 0 else np.vstack([gens_x, gens_y])
    combos = left_kernel(stacked, p, e)
    relations = combos[:, :nx] if combos.size else np.zeros((0, nx), dtype=np.int64)
    exps, _, qinv = diagonalize(relations, p, e, want_qinv=True)
    out = []
    for i in range(nx):
        m = min(exps[i], e) if i < len(exps) else e
        if m > 0:
            out.append((m, (qinv[i] @ gens_x) % q))
    out.sort(key=lambda t: -t[0])
    if not out:
        return [], np.zeros((0, gens_x.shape[1]), dtype=np.int64)
    return [m for m, _ in out], np.array([r for _, r in out], dtype=np.int64)
