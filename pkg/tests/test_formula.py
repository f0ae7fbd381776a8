"""Formula language: parser, printer, classifiers."""

import random

import pytest

from bvm.errors import ArityError, FormulaSyntaxError, UnknownSymbol
from bvm.formula import (
    And,
    App,
    BoundedExists,
    BoundedForall,
    CarrierExists,
    CarrierForall,
    Const,
    Eq,
    Imp,
    Mem,
    Not,
    Or,
    Pred,
    Signature,
    Var,
    free_vars,
    is_restricted,
    parse,
    to_text,
)
from bvm.suites import random_restricted_formula


def test_parse_bounded_forall():
    f = parse("forall u in y . u = x")
    assert f == BoundedForall("u", Var("y"), Eq(Var("u"), Var("x")))


def test_parse_connectives():
    f = parse("~(x in y) \\/ x = y")
    assert f == Or(Not(Mem(Var("x"), Var("y"))), Eq(Var("x"), Var("y")))


def test_parse_missing_body_is_syntax_error():
    with pytest.raises(FormulaSyntaxError) as err:
        parse("forall u in y .")
    assert err.value.line == 1
    assert err.value.column > 1


def test_precedence_and_associativity():
    f = parse("~x = y /\\ x in y \\/ x = x -> y = y -> x in x")
    # -> is right associative and binds loosest
    assert isinstance(f, Imp) and isinstance(f.right, Imp)
    g = parse("a = a /\\ b = b \\/ c = c")
    assert isinstance(g, Or) and isinstance(g.left, And)
    h = parse("~ a in b /\\ c in d")
    assert isinstance(h, And) and isinstance(h.left, Not)


def test_quantifier_body_extends_right():
    f = parse("forall u in y . u = x -> u in y")
    assert isinstance(f, BoundedForall)
    assert isinstance(f.body, Imp)
    g = parse("(forall u in y . u = x) -> x = x")
    assert isinstance(g, Imp)


def test_carrier_quantifiers():
    f = parse("forall v . exists w . v = w")
    assert f == CarrierForall("v", CarrierExists("w", Eq(Var("v"), Var("w"))))
    assert not is_restricted(f)


def test_is_restricted_examples():
    assert is_restricted(parse("forall u in y . u in x"))
    assert not is_restricted(parse("forall u . u = u"))
    assert is_restricted(parse("x in y"))


def test_is_restricted_closure_under_connectives():
    rng = random.Random(4)
    for _ in range(40):
        f = random_restricted_formula(rng, ["x", "y"], rng.randint(0, 4))
        g = random_restricted_formula(rng, ["x", "y"], rng.randint(0, 4))
        assert is_restricted(And(f, g))
        assert is_restricted(Or(f, g)) and is_restricted(Imp(f, g))
        assert is_restricted(Not(f))
        assert is_restricted(BoundedForall("w", Var("x"), f))
        assert not is_restricted(CarrierForall("w", f))


def test_free_vars():
    f = parse("forall u in y . u = x")
    assert free_vars(f) == {"x", "y"}
    assert free_vars(parse("exists v in x . v in v")) == {"x"}


def test_roundtrip_print_parse():
    rng = random.Random(12)
    for _ in range(200):
        f = random_restricted_formula(rng, ["x", "y", "z"], rng.randint(0, 4))
        assert parse(to_text(f)) == f


def test_roundtrip_parse_print_parse():
    texts = [
        "forall u in y . u = x",
        "~(x in y) \\/ x = y",
        "x = y -> (exists u in x . u in y) /\\ x = x",
        "forall v . v = v",
    ]
    for text in texts:
        once = parse(text)
        assert parse(to_text(once)) == once


def test_signature_symbols():
    sig = Signature({"c": 0, "f": 2}, {"le": 2})
    f = parse("le(c, f(x, c))", sig)
    assert f == Pred("le", (Const("c"), App("f", (Var("x"), Const("c")))))
    with pytest.raises(ArityError):
        parse("le(c)", sig)
    with pytest.raises(ArityError):
        parse("f(x) = x", sig)
    with pytest.raises(UnknownSymbol):
        parse("g(x) = x", sig)
    with pytest.raises(ArityError):
        parse("f = x", sig)


def test_uppercase_identifier_rejected_as_variable():
    with pytest.raises(UnknownSymbol):
        parse("X in y")


def test_position_reporting():
    with pytest.raises(FormulaSyntaxError) as err:
        parse("x in y /\\\n  (z = )")
    assert err.value.line == 2


def test_positions_do_not_affect_equality():
    a = parse("x in y")
    b = parse("  x   in   y")
    assert a == b
    assert hash(a) == hash(b)
