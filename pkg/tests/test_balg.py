"""Boolean algebra engine: lattice laws, partitions, homomorphisms."""

import itertools
import random

import pytest

from bvm.balg import (
    BoolAlg,
    Partition,
    aggregate,
    big_join,
    big_meet,
    identity_hom,
    is_partition,
    make_hom,
)
from bvm.errors import AlgebraMismatch, BadSpec


def atomwise_imp(a, b):
    # independent oracle: implication computed atom by atom
    mask = 0
    for i in range(a.alg.atom_count):
        av, bv = a.mask >> i & 1, b.mask >> i & 1
        if (not av) or bv:
            mask |= 1 << i
    return a.alg.element(mask)


@pytest.fixture
def b4():
    return BoolAlg(2)


def test_implication_examples(b4):
    p, q = b4.atom(0), b4.atom(1)
    assert b4.one.imp(b4.zero) == b4.zero
    for x in b4.elements():
        assert b4.zero.imp(x) == b4.one
    assert p.imp(q) == atomwise_imp(p, q) == q


def test_implication_matches_atomwise_oracle_exhaustively():
    alg = BoolAlg(3)
    for a in alg.elements():
        for b in alg.elements():
            assert a.imp(b) == atomwise_imp(a, b)


def test_order_and_basic_ops(b4):
    p, q = b4.atom(0), b4.atom(1)
    assert p <= b4.one and b4.zero <= p
    assert not p <= q
    assert (p & q).is_zero and (p | q).is_one
    assert ~p == q
    assert p.leq(p | q)


def test_aggregate_examples(b4):
    p, q = b4.atom(0), b4.atom(1)
    assert big_join(b4, [p, q]).is_one
    assert big_meet(b4, []).is_one
    assert big_join(b4, []).is_zero
    assert big_meet(b4, [p, b4.one, p]) == p
    with pytest.raises(BadSpec):
        aggregate(b4, [p], "sum")


def test_partition_examples(b4):
    p, q = b4.atom(0), b4.atom(1)
    assert is_partition(b4, [p, q])
    assert not is_partition(b4, [p, p])
    assert is_partition(b4, [b4.one, b4.zero])
    assert not is_partition(b4, [])
    with pytest.raises(BadSpec):
        Partition(b4, [p, p])
    assert len(Partition(b4, [p, q, b4.zero])) == 3


def test_de_morgan_exhaustive_small():
    for n in (1, 2, 3, 4):
        alg = BoolAlg(n)
        for a in alg.elements():
            assert ~~a == a
            for b in alg.elements():
                assert ~(a & b) == ~a | ~b
                assert ~(a | b) == ~a & ~b


def test_de_morgan_randomized_larger():
    rng = random.Random(7)
    alg = BoolAlg(7)
    for _ in range(300):
        a = alg.element(rng.randrange(1 << 7))
        b = alg.element(rng.randrange(1 << 7))
        assert ~(a & b) == ~a | ~b
        assert ~(a | b) == ~a & ~b
        assert ~~a == a


def test_infinite_distributive_law():
    rng = random.Random(11)
    alg = BoolAlg(4)
    for _ in range(200):
        b = alg.element(rng.randrange(16))
        xs = [alg.element(rng.randrange(16)) for _ in range(rng.randint(0, 5))]
        assert b & big_join(alg, xs) == big_join(alg, [b & s for s in xs])
        assert b | big_meet(alg, xs) == big_meet(alg, [b | s for s in xs])


def test_residuation():
    alg = BoolAlg(3)
    for a in alg.elements():
        for b in alg.elements():
            for c in alg.elements():
                assert ((a & c) <= b) == (c <= a.imp(b))


def test_symm_diff_examples(b4):
    p, q = b4.atom(0), b4.atom(1)
    for x in b4.elements():
        assert (x ^ x).is_zero
    assert p ^ b4.one == q
    assert (p ^ q).is_one
    assert p ^ q == (p & ~q) | (q & ~p)


def test_algebra_mismatch():
    a1, a2 = BoolAlg(2), BoolAlg(2)
    with pytest.raises(AlgebraMismatch):
        a1.one & a2.one
    with pytest.raises(AlgebraMismatch):
        big_join(a1, [a2.zero])


def test_projection_hom(b4):
    p, q = b4.atom(0), b4.atom(1)
    proj = make_hom(b4, None, ("projection", "a1"))
    assert proj(p).is_one
    assert proj(q).is_zero
    assert proj(b4.one).is_one and proj(b4.zero).is_zero


def test_swap_automorphism(b4):
    p, q = b4.atom(0), b4.atom(1)
    swap = make_hom(b4, b4, ("permutation", [1, 0]))
    assert swap.is_automorphism
    assert swap(p) == q and swap(q) == p
    inv = swap.inverse()
    assert inv(swap(p)) == p


def test_hom_preserves_operations_exhaustively():
    for n in (1, 2, 3):
        alg = BoolAlg(n)
        homs = [
            make_hom(alg, alg, ("permutation", perm))
            for perm in itertools.permutations(range(n))
        ]
        homs += [make_hom(alg, None, ("projection", i)) for i in range(n)]
        for h in homs:
            assert h(alg.zero).is_zero and h(alg.one).is_one
            for a in alg.elements():
                assert h(~a) == ~h(a)
                for b in alg.elements():
                    assert h(a & b) == h(a) & h(b)
                    assert h(a | b) == h(a) | h(b)


def test_bad_hom_specs(b4):
    with pytest.raises(BadSpec):
        make_hom(b4, b4, ("permutation", [0, 0]))
    with pytest.raises(BadSpec):
        make_hom(b4, None, ("projection", "a9"))
    with pytest.raises(BadSpec):
        make_hom(b4, b4, ("mystery", None))
    with pytest.raises(BadSpec):
        make_hom(b4, BoolAlg(3), ("permutation", [0, 1]))


def test_identity_hom(b4):
    ident = identity_hom(b4)
    for a in b4.elements():
        assert ident(a) == a


def test_element_literals(b4):
    assert b4.parse_element("0").is_zero
    assert b4.parse_element("1").is_one
    assert b4.parse_element("{}").is_zero
    assert b4.parse_element("{a1,a2}").is_one
    assert b4.parse_element("{a2}") == b4.atom(1)
    with pytest.raises(BadSpec):
        b4.parse_element("{a7}")
    with pytest.raises(BadSpec):
        b4.parse_element("nonsense")


def test_elem_json_rendering(b4):
    assert b4.parse_element("{a2,a1}").to_json() == ["a1", "a2"]
    assert b4.zero.to_json() == []
