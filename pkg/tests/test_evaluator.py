"""Truth evaluation, fiber comparison, transfer, fragment maximum."""

import random

import pytest

from bvm.balg import BoolAlg, Partition
from bvm.errors import (
    EmptyFragment,
    NotRestricted,
    UnboundedQuantifier,
    UnboundVariable,
)
from bvm.evaluator import (
    check_los,
    check_restricted_transfer,
    eval_bv,
    eval_classical,
    find_max_witness,
)
from bvm.formula import parse
from bvm.hf import EMPTY, hf
from bvm.suites import random_restricted_formula
from bvm.universe import Universe
from bvm.arrows import descent


@pytest.fixture
def u4():
    return Universe(BoolAlg(2))


def test_eval_bv_examples(u4):
    p = u4.alg.atom(0)
    e = u4.empty
    y = u4.make({e: p})
    assert eval_bv(parse("forall u in y . u = x"), {"x": e, "y": y}, u4).is_one
    assert eval_bv(parse("x in y"), {"x": e, "y": y}, u4) == p
    for x in u4.enumerate_universe(3):
        assert eval_bv(parse("x = x"), {"x": x}, u4).is_one


def test_eval_classical_examples():
    one = hf(EMPTY)
    assert eval_classical(parse("x in y"), {"x": EMPTY, "y": one})
    assert eval_classical(parse("forall u in x . u in y"), {"x": EMPTY, "y": EMPTY})
    assert not eval_classical(parse("x = y"), {"x": one, "y": EMPTY})


def test_eval_errors(u4):
    with pytest.raises(UnboundVariable):
        eval_bv(parse("x in y"), {"x": u4.empty}, u4)
    with pytest.raises(UnboundedQuantifier):
        eval_bv(parse("forall v . v = v"), {}, u4)
    with pytest.raises(NotRestricted):
        eval_classical(parse("forall v . v = v"), {})
    with pytest.raises(NotRestricted):
        check_los(parse("forall v . v = v"), {}, u4)


def test_carrier_quantifier_with_fragment(u4):
    fragment = u4.enumerate_universe(2)
    v = eval_bv(parse("forall v . v = v"), {}, u4, fragment=fragment)
    assert v.is_one
    w = eval_bv(parse("exists v . v in y"), {"y": u4.make({u4.empty: u4.alg.one})},
                u4, fragment=fragment)
    assert w.is_one


def test_check_los_worked_example(u4):
    p = u4.alg.atom(0)
    y = u4.make({u4.empty: p})
    report = check_los(parse("x in y"), {"x": u4.empty, "y": y}, u4)
    assert report.holds
    assert report.satisfied_atoms == p
    assert report.per_atom == {"a1": True, "a2": False}
    assert report.violating_atoms == ()


def test_check_los_standard_names_all_or_none(u4):
    rng = random.Random(2)
    from bvm.hf import all_hf

    for _ in range(40):
        f = random_restricted_formula(rng, ["x", "y"], rng.randint(1, 3))
        env = {v: u4.canonical_name(rng.choice(all_hf(3))) for v in ("x", "y")}
        report = check_los(f, env, u4)
        assert report.holds
        assert report.truth.is_zero or report.truth.is_one


def test_contradiction_has_no_satisfying_atoms(u4):
    f = parse("x in y /\\ ~(x in y)")
    y = u4.make({u4.empty: u4.alg.atom(0)})
    report = check_los(f, {"x": u4.empty, "y": y}, u4)
    assert report.truth.is_zero and report.satisfied_atoms.is_zero


def test_transfer_examples(u4):
    one = hf(EMPTY)
    two_set = hf(one)
    r = check_restricted_transfer(
        parse("forall u in x . exists v in y . u in v"),
        {"x": one, "y": two_set}, u4,
    )
    assert r.holds and r.classical
    r = check_restricted_transfer(parse("x = y"), {"x": EMPTY, "y": EMPTY}, u4)
    assert r.holds and r.classical
    r = check_restricted_transfer(parse("x in y"), {"x": one, "y": one}, u4)
    assert r.holds and not r.classical
    with pytest.raises(NotRestricted):
        check_restricted_transfer(parse("forall v . v = v"), {}, u4)


def test_classical_tautologies_evaluate_to_one(u4):
    rng = random.Random(8)
    fragment = u4.enumerate_universe(3)
    tautologies = [
        "x in y \\/ ~(x in y)",
        "((x = y -> x in z) -> x = y) -> x = y",   # Peirce
        "x = y /\\ y = z -> x = y",
        "~(x in y /\\ ~(x in y))",
        "(x in y -> y in z) \\/ (y in z -> x in y)",
    ]
    for text in tautologies:
        f = parse(text)
        for _ in range(20):
            env = {v: rng.choice(fragment) for v in ("x", "y", "z")}
            assert eval_bv(f, env, u4).is_one


def test_bounded_extensionality_instance(u4):
    f = parse("(forall x in u . x in v) /\\ (forall x in v . x in u) -> u = v")
    fragment = u4.enumerate_universe(3)
    for a in fragment:
        for b in fragment:
            assert eval_bv(f, {"u": a, "v": b}, u4).is_one


def test_bounded_quantifier_matches_descent(u4):
    # over internally nonempty sets the bounded meet equals the meet over
    # the descent
    rng = random.Random(31)
    fragment = u4.enumerate_universe(3)
    body = parse("u in w")
    bounded = parse("forall u in z . u in w")
    tested = 0
    for z in fragment:
        nonempty = u4.alg.zero
        for _, value in z.entries:
            nonempty = nonempty | value
        if not nonempty.is_one:
            continue
        w = rng.choice(fragment)
        via_entries = eval_bv(bounded, {"z": z, "w": w}, u4)
        via_descent = u4.alg.one
        for member in descent(z, fragment, u4):
            via_descent = via_descent & eval_bv(body, {"u": member, "w": w}, u4)
        assert via_entries == via_descent
        tested += 1
    assert tested > 3


def test_relativized_quantifier_fragment_identity(u4):
    # with a full witness in the fragment, relativized universal truth equals
    # the meet over the members satisfying the relativizer with truth one
    rng = random.Random(6)
    fragment = u4.enumerate_universe(3)
    phi = parse("x in w")     # relativizer
    psi = parse("x in v")     # body
    for _ in range(30):
        w = rng.choice(fragment)
        v = rng.choice(fragment)
        witnesses = [
            u for u in fragment
            if eval_bv(phi, {"x": u, "w": w}, u4).is_one
        ]
        if not witnesses:
            continue
        relativized = parse("forall x . x in w -> x in v")
        lhs = eval_bv(relativized, {"w": w, "v": v}, u4, fragment=fragment)
        rhs = u4.alg.one
        for u in witnesses:
            rhs = rhs & eval_bv(psi, {"x": u, "v": v}, u4)
        assert lhs == rhs


def test_find_max_witness_worked_example(u4):
    p, q = u4.alg.atom(0), u4.alg.atom(1)
    one_name = u4.canonical_name(hf(EMPTY))
    y = u4.make({u4.empty: p, one_name: q})
    fragment = u4.enumerate_universe(2)
    witness, value = find_max_witness(parse("x in y"), "x", {"y": y}, fragment, u4)
    assert value.is_one
    # fiber oracle: the witness belongs to y with truth one
    assert u4.truth_mem(witness, y).is_one
    expected = u4.mix(Partition(u4.alg, [p, q]), [u4.empty, one_name])
    assert u4.truth_eq(witness, expected).is_one


def test_find_max_witness_trivial_and_empty(u4):
    fragment = u4.enumerate_universe(2)
    witness, value = find_max_witness(parse("x = x"), "x", {}, fragment, u4)
    assert value.is_one and witness is fragment[0]
    witness, value = find_max_witness(parse("x in x"), "x", {}, fragment, u4)
    assert value.is_zero
    with pytest.raises(EmptyFragment):
        find_max_witness(parse("x = x"), "x", {}, [], u4)


def test_reports_serialize(u4):
    y = u4.make({u4.empty: u4.alg.atom(0)})
    los = check_los(parse("x in y"), {"x": u4.empty, "y": y}, u4).to_json()
    assert los["holds"] is True and los["truth"] == ["a1"]
    tr = check_restricted_transfer(parse("x = x"), {"x": EMPTY}, u4).to_json()
    assert tr["holds"] is True
