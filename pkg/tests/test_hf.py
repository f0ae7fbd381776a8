"""Hereditarily finite sets: parsing, ordering, pairs, cumulative levels."""

import pytest

from bvm.hf import (
    EMPTY,
    HFSet,
    all_hf,
    hf,
    hf_function,
    is_ordinal,
    kpair,
    ktuple,
    level_size,
    ordinal,
    parse_hf,
    powerset,
)


def test_basic_construction():
    assert len(EMPTY) == 0 and EMPTY.rank == 0
    one = hf(EMPTY)
    assert EMPTY in one and one.rank == 1
    assert hf(EMPTY, EMPTY) == one  # duplicates collapse


def test_ordinals():
    assert ordinal(0) == EMPTY
    assert ordinal(2) == hf(EMPTY, hf(EMPTY))
    assert ordinal(3).rank == 3
    for n in range(5):
        assert is_ordinal(ordinal(n))
    assert not is_ordinal(hf(hf(EMPTY)))  # {{0}} is not transitive


def test_parse_and_repr_roundtrip():
    for text in ("{}", "{{}}", "{{},{{}}}", "{{{}},{}}"):
        h = parse_hf(text)
        assert parse_hf(repr(h)) == h
    assert parse_hf("{ {} , {{}} }") == ordinal(2)
    with pytest.raises(ValueError):
        parse_hf("{")
    with pytest.raises(ValueError):
        parse_hf("{}}")


def test_total_order_is_deterministic():
    pool = list(all_hf(4))
    once = sorted(pool, key=HFSet.sort_key)
    again = sorted(list(reversed(pool)), key=HFSet.sort_key)
    assert once == again
    assert once[0] == EMPTY


def test_levels():
    assert level_size(1) == 1 and level_size(2) == 2
    assert level_size(3) == 4 and level_size(4) == 16
    assert [len(all_hf(k)) for k in (1, 2, 3, 4)] == [1, 2, 4, 16]
    assert set(all_hf(2)) < set(all_hf(3))


def test_powerset():
    assert len(powerset(ordinal(2))) == 4
    assert EMPTY in powerset(EMPTY)


def test_kuratowski_pairs():
    a, b = EMPTY, hf(EMPTY)
    assert kpair(a, a) == hf(hf(a))  # degenerate pair {{a}}
    p = kpair(a, b)
    assert len(p) == 2
    assert ktuple([a]) == a
    assert ktuple([a, b, a]) == kpair(kpair(a, b), a)
    with pytest.raises(ValueError):
        ktuple([])


def test_hf_function_graph():
    h = hf_function({EMPTY: hf(EMPTY), hf(EMPTY): EMPTY})
    assert len(h) == 2
    assert kpair(EMPTY, hf(EMPTY)) in h
