import random

import pytest

from galcert.permutation import Permutation, parse_cycles


def random_perm(rng, degree):
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)


def sign_by_inversions(p):
    # independent of the cycle decomposition used by Permutation.sign
    inv = sum(
        1
        for i in range(p.degree)
        for j in range(i + 1, p.degree)
        if p.images[i] > p.images[j]
    )
    return -1 if inv % 2 else 1


def test_parse_disjoint_cycles():
    p = parse_cycles("(1 2)(3 4 5)", 5)
    assert p.images == (1, 0, 3, 4, 2)
    assert p.cycle_string() == "(1 2)(3 4 5)"


def test_parse_applies_cycles_left_to_right():
    # (1 2) then (2 3) sends 1 -> 2 -> 3, so the word is the 3-cycle (1 3 2)
    p = parse_cycles("(1 2)(2 3)", 3)
    assert p == parse_cycles("(1 2)", 3) * parse_cycles("(2 3)", 3)
    assert p.images == (2, 0, 1)
    assert p.cycle_string() == "(1 3 2)"


def test_parse_identity_forms():
    assert parse_cycles("", 4).is_identity()
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(1,2,3)", 3) == parse_cycles("(1 2 3)", 3)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_cycles("(1 2", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 2 2)", 3)
    with pytest.raises(ValueError):
        parse_cycles("(1 4)", 3)
    with pytest.raises(ValueError):
        parse_cycles("1 2", 3)
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_composition_convention():
    rng = random.Random(7)
    for _ in range(100):
        p = random_perm(rng, 8)
        q = random_perm(rng, 8)
        prod = p * q
        for x in range(8):
            assert prod(x) == q(p(x))


def test_inverse_and_power():
    rng = random.Random(8)
    for _ in range(50):
        p = random_perm(rng, 7)
        assert (p * p.inverse()).is_identity()
        assert p**0 == Permutation.identity(7)
        assert p**3 == p * p * p
        assert p**-2 == (p.inverse()) * (p.inverse())
        assert (p ** p.order()).is_identity()


def test_cycle_string_roundtrip():
    rng = random.Random(9)
    for _ in range(50):
        p = random_perm(rng, 9)
        assert parse_cycles(p.cycle_string(), 9) == p


def test_conjugate_relabels_cycles():
    rng = random.Random(10)
    for _ in range(50):
        g = random_perm(rng, 6)
        h = random_perm(rng, 6)
        c = g.conjugate(h)
        for a in range(6):
            assert c(h(a)) == h(g(a))
        assert c.cycle_type() == g.cycle_type()


def test_sign_matches_inversion_count():
    rng = random.Random(11)
    for _ in range(200):
        p = random_perm(rng, rng.randint(1, 9))
        assert p.sign() == sign_by_inversions(p)
    assert Permutation.identity(5).sign() == 1
    assert parse_cycles("(1 2)", 5).sign() == -1
    assert parse_cycles("(1 2 3)", 5).sign() == 1


def test_sign_is_multiplicative():
    rng = random.Random(12)
    for _ in range(100):
        p = random_perm(rng, 7)
        q = random_perm(rng, 7)
        assert (p * q).sign() == p.sign() * q.sign()


def test_cycle_type_and_order():
    p = parse_cycles("(1 2)(3 4 5)", 6)
    assert p.cycle_type() == (3, 2, 1)
    assert p.order() == 6
    assert Permutation.identity(4).cycle_type() == (1, 1, 1, 1)
