import random
from itertools import product
from math import factorial

import pytest

from galcert import catalogue
from galcert.errors import BudgetExceeded
from galcert.monodromy import (
    RamificationDatum,
    cycle_type,
    is_self_normalizing,
    parity_obstruction,
    realize_datum,
    recognize_symmetric_by_transpositions,
    signature,
)
from galcert.permgroup import PermGroup
from galcert.permutation import Permutation, parse_cycles


def datum(text):
    return RamificationDatum.parse(text)


def oracle_realizable(d, predicate):
    """Unsliced brute force over full cycle-type pools."""
    sym = catalogue.symmetric(d.degree)
    pools = [
        [e for e in sym.elements() if e.cycle_type() == t] for t in d.branch_types
    ]
    for pre in product(*pools[:-1]):
        prod = Permutation.identity(d.degree)
        for g in pre:
            prod = prod * g
        last = prod.inverse()
        if last.cycle_type() != d.branch_types[-1]:
            continue
        if predicate(pre + (last,)):
            return True
    return False


def test_signature_is_a_morphism():
    rng = random.Random(41)
    for _ in range(60):
        images = list(range(6))
        rng.shuffle(images)
        p = Permutation(images)
        rng.shuffle(images)
        q = Permutation(images)
        assert signature(p * q) == signature(p) * signature(q)
    assert signature(parse_cycles("(1 2)", 4)) == -1
    assert cycle_type(parse_cycles("(1 2)(3 4 5)", 6)) == (3, 2, 1)


def test_parity_obstruction_values():
    assert parity_obstruction(datum("2,1,1;4;4"))
    assert not parity_obstruction(datum("4;3,1;2,1,1"))
    assert not parity_obstruction(datum("2,2;4;4"))
    # obstruction fires exactly when the sign product is -1
    for d in ("2,1,1;2,1,1", "3,1;3,1;3,1", "2,1;2,1;3", "4;4;2,1,1"):
        dd = datum(d)
        signs = 1
        sym = catalogue.symmetric(dd.degree)
        for t in dd.branch_types:
            rep = next(e for e in sym.elements() if e.cycle_type() == t)
            signs *= rep.sign()
        assert parity_obstruction(dd) == (signs == -1)


def test_genus_values():
    assert datum("4;3,1;2,1,1").genus() == 0
    assert datum("5;4,1;2,1,1,1").genus() == 0
    assert datum("2,2;4;4").genus() == 1
    assert datum("2;2").genus() == 0
    assert datum("2,1,1;4;4").genus() == 0.5


def test_realize_classical_symmetric_data():
    for n in (4, 5):
        types = f"{n};{n - 1},1;2" + ",1" * (n - 2)
        result = realize_datum(datum(types), target="full_symmetric")
        assert result.realized and result.parity_ok
        assert result.witness_group_order == factorial(n)
        assert result.genus == 0
        w = result.witness
        assert [e.cycle_type() for e in w] == [t for t in datum(types).branch_types]
        prod = Permutation.identity(n)
        for e in w:
            prod = prod * e
        assert prod.is_identity()
        assert PermGroup(w, n).order == factorial(n)


def test_realize_parity_rejection():
    result = realize_datum(datum("2,1,1;4;4"), target="any")
    assert result.status == "none" and not result.parity_ok
    assert not oracle_realizable(datum("2,1,1;4;4"), lambda entries: True)


def test_realize_alternating_target():
    d = datum("3,1;3,1;3,1")
    alt = realize_datum(d, target="alternating")
    assert alt.realized and alt.witness_group_order == 12
    assert all(e.sign() == 1 for e in alt.witness)

    sym = realize_datum(d, target="full_symmetric")
    assert sym.status == "none"
    assert not oracle_realizable(
        d, lambda entries: PermGroup(entries, 4).order == 24
    )


def test_realize_transitive_but_small():
    d = datum("2,2;4;4")
    res = realize_datum(d, target="any")
    assert res.realized and res.witness_group_order == 4
    none = realize_datum(d, target="full_symmetric")
    assert none.status == "none"
    assert not oracle_realizable(
        d, lambda entries: PermGroup(entries, 4).order == 24
    )
    assert oracle_realizable(
        d, lambda entries: PermGroup(entries, 4).is_transitive()
    )


def test_realize_matches_oracle_on_degree_4_triples():
    sym = catalogue.symmetric(4)
    types = sorted({e.cycle_type() for e in sym.elements()})
    rng = random.Random(42)
    picks = [tuple(rng.choice(types) for _ in range(3)) for _ in range(12)]
    for triple in picks:
        d = RamificationDatum(4, triple)
        got = realize_datum(d, target="any")
        want = oracle_realizable(d, lambda entries: PermGroup(entries, 4).is_transitive())
        assert got.realized == want, triple


def test_realize_single_branch_point():
    ok = realize_datum(RamificationDatum(1, ((1,),)), target="any")
    assert ok.realized and ok.witness_group_order == 1
    no = realize_datum(RamificationDatum(3, ((1, 1, 1),)), target="any")
    assert no.status == "none"  # trivial group is not transitive on 3 points


def test_realize_budget_and_degree_guards():
    d = datum("8;7,1;2,1,1,1,1,1,1")
    assert realize_datum(d, budget=10).status == "unknown"
    with pytest.raises(BudgetExceeded):
        realize_datum(RamificationDatum(9, ((9,), (9,))))
    with pytest.raises(ValueError):
        realize_datum(datum("2;2"), target="weird")


def test_datum_validation():
    with pytest.raises(ValueError):
        RamificationDatum(4, ((3, 2),))
    with pytest.raises(ValueError):
        RamificationDatum(4, ((1, 3),))
    with pytest.raises(ValueError):
        RamificationDatum(4, ((4, 0),))
    with pytest.raises(ValueError):
        RamificationDatum(4, ())
    with pytest.raises(ValueError):
        RamificationDatum.parse("4;x,1")
    with pytest.raises(ValueError):
        RamificationDatum.parse("4;3,1", degree=5)
    d = RamificationDatum.parse("3,1;2,2")
    assert d.degree == 4 and d.branch_types == ((3, 1), (2, 2))
    assert d.as_text() == "3,1;2,2"


def connected_by_transpositions(transpositions, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in transpositions:
        moved = [p for p in range(n) if t(p) != p]
        a, b = find(moved[0]), find(moved[1])
        parent[a] = b
    return len({find(x) for x in range(n)}) == 1


def test_recognize_symmetric_star_and_path():
    for n in range(3, 7):
        star = [parse_cycles(f"(1 {k})", n) for k in range(2, n + 1)]
        path = [parse_cycles(f"({k} {k + 1})", n) for k in range(1, n)]
        for gens in (star, path):
            g = PermGroup(gens, n)
            assert recognize_symmetric_by_transpositions(g)
            assert g.order == factorial(n)


def test_recognize_symmetric_rejections():
    assert not recognize_symmetric_by_transpositions(catalogue.alternating(4))
    assert not recognize_symmetric_by_transpositions(catalogue.cyclic(6))
    assert not recognize_symmetric_by_transpositions(catalogue.dihedral(4))
    split = PermGroup([parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)])
    assert not recognize_symmetric_by_transpositions(split)


def test_transitive_transposition_groups_are_symmetric():
    # random transposition sets: connectivity of the edge graph is an
    # independent check of transitivity, and every connected case must
    # come out full symmetric
    rng = random.Random(43)
    for n in range(3, 7):
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for _ in range(20):
            chosen = rng.sample(pairs, rng.randint(1, len(pairs)))
            gens = [parse_cycles(f"({i} {j})", n) for i, j in chosen]
            g = PermGroup(gens, n)
            connected = connected_by_transpositions(gens, n)
            assert g.is_transitive() == connected
            if connected:
                assert recognize_symmetric_by_transpositions(g)
                assert g.order == factorial(n)


def test_is_self_normalizing():
    s4 = catalogue.symmetric(4)
    assert is_self_normalizing(s4)
    assert is_self_normalizing(catalogue.dihedral(4))
    assert not is_self_normalizing(catalogue.alternating(4))
    assert not is_self_normalizing(catalogue.cyclic(4))
    s3_in_s4 = PermGroup([parse_cycles("(1 2)", 4), parse_cycles("(1 2 3)", 4)])
    assert is_self_normalizing(s3_in_s4)
    with pytest.raises(BudgetExceeded):
        is_self_normalizing(catalogue.cyclic(9))
