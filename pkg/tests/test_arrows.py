"""Descent, ascent, extensionality, internal tuples, two-point descent."""

import itertools
import random

import pytest

from bvm.arrows import (
    ExtMap,
    apply_internal,
    ascend_function,
    ascent,
    descend_function,
    descend_two_point,
    descent,
    internal_pair,
    internal_tuple,
    is_extensional,
    mix_closure,
)
from bvm.balg import BoolAlg, Partition
from bvm.errors import NotAFunction, NotExtensional, RankInsufficient
from bvm.hf import EMPTY, all_hf, hf, hf_function, kpair, ktuple
from bvm.universe import Universe


@pytest.fixture
def u4():
    return Universe(BoolAlg(2))


@pytest.fixture
def frag(u4):
    return u4.enumerate_universe(3)


def test_descent_examples(u4, frag):
    one_name = u4.canonical_name(hf(EMPTY))
    assert descent(u4.empty, frag, u4) == []
    got = descent(one_name, frag, u4)
    assert len(got) == 1 and got[0] is u4.canonicalize(u4.empty)
    two = ascent([u4.empty, one_name], u4)
    assert len(descent(two, frag, u4)) == 4


def test_ascent_examples(u4, frag):
    assert ascent([], u4) is u4.empty
    one_name = u4.canonical_name(hf(EMPTY))
    assert u4.truth_eq(ascent([u4.empty], u4), one_name).is_one
    # ascent then descent gives the mixing closure
    pair = [u4.empty, one_name]
    closure = mix_closure(pair, frag, u4)
    assert {s.uid for s in descent(ascent(pair, u4), frag, u4)} == {
        s.uid for s in closure
    }


def test_descent_of_ascent_contains_the_input(u4, frag):
    rng = random.Random(19)
    for _ in range(20):
        xs = rng.sample(frag, rng.randint(1, 4))
        down = descent(ascent(xs, u4), frag, u4)
        down_ids = {s.uid for s in down}
        assert {s.uid for s in xs} <= down_ids


def test_mix_closure_examples(u4, frag):
    one_name = u4.canonical_name(hf(EMPTY))
    single = mix_closure([one_name], frag, u4)
    assert len(single) == 1
    pair_closure = mix_closure([u4.empty, one_name], frag, u4)
    assert len(pair_closure) == 4
    again = mix_closure(pair_closure, frag, u4)
    assert {s.uid for s in again} == {s.uid for s in pair_closure}


def test_is_extensional_examples(u4):
    one_name = u4.canonical_name(hf(EMPTY))
    p = u4.alg.atom(0)
    # pairwise internally distinct sources: any images work
    f = ExtMap.function({u4.empty: one_name, one_name: u4.empty})
    assert is_extensional(f, u4)
    # identity is extensional
    members = [u4.empty, one_name, u4.make({u4.empty: p})]
    ident = ExtMap.function({x: x for x in members})
    assert is_extensional(ident, u4)
    # explicit counterexample: sources equal at an atom, images nowhere equal
    x1, x2 = u4.empty, u4.make({u4.empty: p})   # [[x1 = x2]] = not p
    bad = ExtMap.function({x1: u4.empty, x2: one_name})
    assert not is_extensional(bad, u4)


def test_internal_tuple_examples(u4, frag):
    rng = random.Random(14)
    pair = internal_pair(u4.empty, u4.empty, u4)
    for q in range(2):
        assert u4.collapse_at_atom(q, pair) == hf(hf(EMPTY))
    for _ in range(25):
        xs = [rng.choice(frag) for _ in range(rng.randint(1, 3))]
        tup = internal_tuple(xs, u4)
        for q in range(2):
            classical = ktuple([u4.collapse_at_atom(q, x) for x in xs])
            assert u4.collapse_at_atom(q, tup) == classical
    for _ in range(15):
        x, y = rng.choice(frag), rng.choice(frag)
        x2, y2 = rng.choice(frag), rng.choice(frag)
        lhs = u4.truth_eq(internal_pair(x, y, u4), internal_pair(x2, y2, u4))
        assert lhs == u4.truth_eq(x, x2) & u4.truth_eq(y, y2)


def test_ascend_descend_identity_function(u4, frag):
    one_name = u4.canonical_name(hf(EMPTY))
    dom_members = [u4.canonicalize(u4.empty), u4.canonicalize(one_name)]
    f = ExtMap.function({x: x for x in dom_members})
    g = ascend_function(f, u4)
    dom = ascent(dom_members, u4)
    back = descend_function(g, dom, dom, frag, u4)
    for x in dom_members:
        got = [vs[0] for k, vs in back.pairs if u4.truth_eq(k, x).is_one]
        assert got and u4.truth_eq(got[0], x).is_one


def test_descend_standard_name_of_hf_function(u4, frag):
    # the standard name of a function agrees with the function on names
    h = {EMPTY: hf(EMPTY), hf(EMPTY): hf(EMPTY)}
    graph_name = u4.canonical_name(hf_function(h))
    dom_name = u4.canonical_name(hf(EMPTY, hf(EMPTY)))
    cod_name = u4.canonical_name(hf(hf(EMPTY)))
    back = descend_function(
        graph_name, dom_name, cod_name, frag, u4, hf_source=list(h)
    )
    assert back.hf_source
    for a, image in h.items():
        got = back.apply(a)
        assert u4.truth_eq(got, u4.canonical_name(image)).is_one


def test_descend_rejects_non_functions(u4, frag):
    one_name = u4.canonical_name(hf(EMPTY))
    x = u4.canonicalize(u4.empty)
    graph = ascent(
        [internal_pair(x, x, u4), internal_pair(x, u4.canonicalize(one_name), u4)],
        u4,
    )
    dom = ascent([x], u4)
    cod = ascent([x, u4.canonicalize(one_name)], u4)
    with pytest.raises(NotAFunction):
        descend_function(graph, dom, cod, frag, u4)


def test_ascend_rejects_non_extensional(u4):
    p = u4.alg.atom(0)
    one_name = u4.canonical_name(hf(EMPTY))
    bad = ExtMap.function({
        u4.empty: u4.empty,
        u4.make({u4.empty: p}): one_name,
    })
    with pytest.raises(NotExtensional):
        ascend_function(bad, u4)


def test_modified_ascent_names_the_argument(u4):
    # the modified arrow satisfies [[f(x-name) = f(x)]] = one
    one_name = u4.canonical_name(hf(EMPTY))
    f = ExtMap.function({EMPTY: one_name, hf(EMPTY): u4.empty})
    g = ascend_function(f, u4)
    for a, image in ((EMPTY, one_name), (hf(EMPTY), u4.empty)):
        truth = apply_internal(g, u4.canonical_name(a), image, u4)
        assert truth.is_one


def test_descent_of_composition(u4, frag):
    # composing internal function graphs then descending equals composing
    # the descents
    rng = random.Random(23)
    members = [u4.canonicalize(u4.empty), u4.canonicalize(u4.canonical_name(hf(EMPTY)))]
    for _ in range(5):
        f_map = {x: rng.choice(members) for x in members}
        g_map = {x: rng.choice(members) for x in members}
        f = ExtMap.function(f_map)
        g = ExtMap.function(g_map)
        gf = ExtMap.function({x: g_map[f_map[x]] for x in members})
        dom = ascent(members, u4)
        gf_up = ascend_function(gf, u4)
        composed_down = descend_function(gf_up, dom, dom, frag, u4)
        for x in members:
            via_pair = g_map[f_map[x]]
            got = [vs[0] for k, vs in composed_down.pairs
                   if u4.truth_eq(k, x).is_one]
            assert got and u4.truth_eq(got[0], via_pair).is_one


def test_inverse_of_internal_bijection(u4, frag):
    members = [u4.canonicalize(u4.empty), u4.canonicalize(u4.canonical_name(hf(EMPTY)))]
    swap = ExtMap.function({members[0]: members[1], members[1]: members[0]})
    g = ascend_function(swap, u4)
    inverse_graph = ascent(
        [internal_pair(swap.apply(x), x, u4) for x in members], u4
    )
    dom = ascent(members, u4)
    down = descend_function(g, dom, dom, frag, u4)
    down_inv = descend_function(inverse_graph, dom, dom, frag, u4)
    for x in members:
        y = down.apply(next(k for k, _ in down.pairs if u4.truth_eq(k, x).is_one))
        x_back = down_inv.apply(
            next(k for k, _ in down_inv.pairs if u4.truth_eq(k, y).is_one)
        )
        assert u4.truth_eq(x_back, x).is_one


def test_correspondence_inverse_can_fail_extensionality(u4):
    # search for an extensional correspondence with non-extensional inverse
    p = u4.alg.atom(0)
    candidates = [
        u4.empty,
        u4.canonical_name(hf(EMPTY)),
        u4.make({u4.empty: p}),
        u4.make({u4.empty: ~p}),
    ]
    found = None
    for x1, x2 in itertools.permutations(candidates, 2):
        for y1, y2 in itertools.permutations(candidates, 2):
            phi = ExtMap.correspondence({x1: (y1,), x2: (y2,)})
            inv = ExtMap.correspondence({y1: (x1,), y2: (x2,)})
            if is_extensional(phi, u4) and not is_extensional(inv, u4):
                found = (phi, inv)
                break
        if found:
            break
    assert found is not None


def test_two_point_descent_examples(u4):
    p, q = u4.alg.atom(0), u4.alg.atom(1)
    tp = descend_two_point(u4)
    assert u4.truth_eq(tp.chi[u4.alg.one], tp.one).is_one
    assert u4.truth_eq(tp.chi[p], tp.one) == p
    assert u4.truth_eq(tp.chi[p], tp.zero) == q
    for a in u4.alg.elements():
        for b in u4.alg.elements():
            assert tp.join(tp.chi[a], tp.chi[b]) is tp.chi[a | b]
            assert tp.meet(tp.chi[a], tp.chi[b]) is tp.chi[a & b]
        assert tp.complement(tp.chi[a]) is tp.chi[~a]
    with pytest.raises(RankInsufficient):
        descend_two_point(u4, rank_budget=1)


def test_two_point_descent_is_exactly_the_chi_image(u4):
    tp = descend_two_point(u4)
    fragment = u4.enumerate_universe(3)
    down = descent(tp.two, fragment, u4)
    image = {u4.canonicalize(tp.chi[b]).uid for b in u4.alg.elements()}
    assert image == {s.uid for s in down}
