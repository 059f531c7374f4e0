import itertools
import random

import numpy as np

from galcert.localring import diagonalize, in_span, kernel, left_kernel, quotient, valuations


def brute_kernel(a, q):
    """All v in (Z/q)^m with a @ v = 0, as a set of tuples."""
    a = np.asarray(a)
    m = a.shape[1]
    out = set()
    for v in itertools.product(range(q), repeat=m):
        if not np.any((a @ np.array(v)) % q):
            out.add(v)
    return out


def span_set(rows, q):
    """All coefficient combinations of the given rows, as a set of tuples."""
    rows = np.asarray(rows)
    if rows.size == 0:
        return {(0,) * rows.shape[1]} if rows.ndim == 2 else {()}
    out = set()
    for coefs in itertools.product(range(q), repeat=rows.shape[0]):
        out.add(tuple((np.array(coefs) @ rows) % q))
    return out


def test_valuations():
    v = valuations(np.array([0, 1, 2, 4, 6, 8, 12]), 2, 3)
    assert list(v) == [3, 0, 1, 2, 1, 3, 2]
    v = valuations(np.array([9, 3, 1, 0]), 3, 2)
    assert list(v) == [2, 1, 0, 2]


def test_diagonalize_reconstructs_column_transform():
    rng = random.Random(7)
    for p, e in [(2, 3), (3, 2), (2, 1), (5, 1)]:
        q = p**e
        for _ in range(40):
            rows = rng.randrange(1, 5)
            cols = rng.randrange(1, 5)
            a = np.array([[rng.randrange(q) for _ in range(cols)] for _ in range(rows)])
            exps, qmat, qinv = diagonalize(a, p, e, want_q=True, want_qinv=True)
            assert np.array_equal((qmat @ qinv) % q, np.eye(cols, dtype=np.int64))
            assert np.array_equal((qinv @ qmat) % q, np.eye(cols, dtype=np.int64))
            assert all(0 <= x <= e for x in exps)
            # exponents of the diagonal are nondecreasing: the pivot has
            # globally minimal valuation at every step
            assert exps == sorted(exps)


def test_kernel_matches_enumeration():
    rng = random.Random(11)
    for p, e in [(2, 2), (2, 3), (3, 1), (3, 2)]:
        q = p**e
        for _ in range(30):
            rows = rng.randrange(1, 4)
            cols = rng.randrange(1, 4)
            a = np.array([[rng.randrange(q) for _ in range(cols)] for _ in range(rows)])
            gens = kernel(a, p, e)
            expected = brute_kernel(a, q)
            if gens.size:
                assert not np.any((a @ gens.T) % q)
            got = span_set(gens, q) if gens.size else {(0,) * cols}
            assert got == expected


def test_left_kernel_is_kernel_of_transpose():
    a = np.array([[2, 0], [0, 4], [2, 4]])
    w = left_kernel(a, 2, 3)
    assert w.size
    assert not np.any((w @ a) % 8)


def test_in_span():
    rng = random.Random(13)
    for p, e in [(2, 2), (3, 1), (2, 3)]:
        q = p**e
        for _ in range(25):
            rows = rng.randrange(1, 4)
            cols = rng.randrange(1, 4)
            b = np.array([[rng.randrange(q) for _ in range(cols)] for _ in range(rows)])
            members = span_set(b, q)
            for _ in range(8):
                v = tuple(rng.randrange(q) for _ in range(cols))
                assert in_span(np.array(v), b, p, e) == (v in members)


def test_quotient_known_structures():
    # (Z/4)^2 / <(2,0)> = Z/4 x Z/2
    gx = np.eye(2, dtype=np.int64)
    gy = np.array([[2, 0]])
    exps, reps = quotient(gx, gy, 2, 2)
    assert exps == [2, 1]
    assert reps.shape == (2, 2)
    # (Z/8) / <4> = Z/4
    exps, _ = quotient(np.array([[1]]), np.array([[4]]), 2, 3)
    assert exps == [2]
    # full quotient by itself is trivial
    exps, reps = quotient(gx, gx, 2, 2)
    assert exps == []
    assert reps.shape[0] == 0
    # quotient with no relations keeps everything
    exps, _ = quotient(gx, np.zeros((0, 2), dtype=np.int64), 2, 2)
    assert exps == [2, 2]


def test_quotient_matches_enumeration():
    # cardinality of span(x)/span(y) equals the product of the factors,
    # and each representative has the reported order in the quotient
    rng = random.Random(17)
    for p, e in [(2, 2), (3, 1)]:
        q = p**e
        for _ in range(20):
            cols = rng.randrange(1, 4)
            gx = np.eye(cols, dtype=np.int64)
            ny = rng.randrange(0, 3)
            gy = np.array([[rng.randrange(q) for _ in range(cols)] for _ in range(ny)])
            if ny == 0:
                gy = np.zeros((0, cols), dtype=np.int64)
            exps, reps = quotient(gx, gy, p, e)
            yset = span_set(gy, q) if gy.size else {(0,) * cols}
            quotient_size = q**cols // len(yset)
            size = 1
            for m in exps:
                size *= p**m
            assert size == quotient_size
            for m, rep in zip(exps, reps):
                # p^m * rep dies in the quotient, p^(m-1) * rep does not
                assert tuple((p**m * rep) % q) in yset
                assert tuple((p ** (m - 1) * rep) % q) not in yset
