"""First-order language with membership and equality.

Grammar (ASCII)::

    F  :=  forall V in T . F  |  exists V in T . F
        |  forall V . F       |  exists V . F
        |  F -> F  |  F \\/ F  |  F /\\ F  |  ~F  |  (F)
        |  T in T  |  T = T  |  P(T,...)
    T  :=  V  |  c  |  f(T,...)

Precedence: ~  binds tightest, then /\\, then \\/, then -> (right
associative); a quantifier body extends as far to the right as possible.
Variables match ``[a-z][a-z0-9_]*``; anything declared in the signature is a
constant, function, or predicate symbol instead.

Bounded quantifiers are primitive rather than sugar for a guarded carrier
quantifier: their Boolean-valued semantics differ.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ArityError, FormulaSyntaxError, UnknownSymbol


@dataclass
class Signature:
    """Finite stock of function and predicate symbols with arities."""

    functions: dict
    predicates: dict

    def __post_init__(self):
        for name, arity in list(self.functions.items()) + list(self.predicates.items()):
            if arity < 0:
                raise ArityError(f"negative arity for {name!r}")


EMPTY_SIGNATURE = Signature({}, {})


# ---------------------------------------------------------------------------
# terms

@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Const:
    symbol: str
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class App:
    symbol: str
    args: tuple
    pos: tuple = field(default=None, compare=False, repr=False)


# ---------------------------------------------------------------------------
# formulas

@dataclass(frozen=True)
class Mem:
    left: object
    right: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Eq:
    left: object
    right: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Pred:
    symbol: str
    args: tuple
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Not:
    body: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class And:
    left: object
    right: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Or:
    left: object
    right: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Imp:
    left: object
    right: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class BoundedForall:
    var: str
    bound: object
    body: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class BoundedExists:
    var: str
    bound: object
    body: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class CarrierForall:
    var: str
    body: object
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class CarrierExists:
    var: str
    body: object
    pos: tuple = field(default=None, compare=False, repr=False)


BINARY = (And, Or, Imp)
QUANTIFIERS = (BoundedForall, BoundedExists, CarrierForall, CarrierExists)


def is_restricted(f) -> bool:
    """True iff every quantifier in the formula is bounded by a term."""
    if isinstance(f, (Mem, Eq, Pred)):
        return True
    if isinstance(f, Not):
        return is_restricted(f.body)
    if isinstance(f, BINARY):
        return is_restricted(f.left) and is_restricted(f.right)
    if isinstance(f, (BoundedForall, BoundedExists)):
        return is_restricted(f.body)
    if isinstance(f, (CarrierForall, CarrierExists)):
        return False
    raise TypeError(f"not a formula: {f!r}")


def term_vars(t):
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Const):
        return set()
    if isinstance(t, App):
        out = set()
        for a in t.args:
            out |= term_vars(a)
        return out
    raise TypeError(f"not a term: {t!r}")


def free_vars(f) -> frozenset:
    if isinstance(f, (Mem, Eq)):
        return frozenset(term_vars(f.left) | term_vars(f.right))
    if isinstance(f, Pred):
        out = set()
        for a in f.args:
            out |= term_vars(a)
        return frozenset(out)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (BoundedForall, BoundedExists)):
        return frozenset(term_vars(f.bound)) | (free_vars(f.body) - {f.var})
    if isinstance(f, (CarrierForall, CarrierExists)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# printing

def term_to_text(t):
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return t.symbol
    if isinstance(t, App):
        return f"{t.symbol}({', '.join(term_to_text(a) for a in t.args)})"
    raise TypeError(f"not a term: {t!r}")


_LEVEL = {Imp: 1, Or: 2, And: 3}


def to_text(f, _level=0):
    if isinstance(f, Mem):
        s = f"{term_to_text(f.left)} in {term_to_text(f.right)}"
        return f"({s})" if _level >= 4 else s
    if isinstance(f, Eq):
        s = f"{term_to_text(f.left)} = {term_to_text(f.right)}"
        return f"({s})" if _level >= 4 else s
    if isinstance(f, Pred):
        return f"{f.symbol}({', '.join(term_to_text(a) for a in f.args)})"
    if isinstance(f, Not):
        return f"~{to_text(f.body, 4)}"
    if isinstance(f, Imp):
        s = f"{to_text(f.left, 2)} -> {to_text(f.right, 1)}"
        return f"({s})" if _level > 1 else s
    if isinstance(f, Or):
        s = f"{to_text(f.left, 2)} \\/ {to_text(f.right, 3)}"
        return f"({s})" if _level > 2 else s
    if isinstance(f, And):
        s = f"{to_text(f.left, 3)} /\\ {to_text(f.right, 4)}"
        return f"({s})" if _level > 3 else s
    if isinstance(f, BoundedForall):
        s = f"forall {f.var} in {term_to_text(f.bound)} . {to_text(f.body, 0)}"
        return f"({s})" if _level > 0 else s
    if isinstance(f, BoundedExists):
        s = f"exists {f.var} in {term_to_text(f.bound)} . {to_text(f.body, 0)}"
        return f"({s})" if _level > 0 else s
    if isinstance(f, CarrierForall):
        s = f"forall {f.var} . {to_text(f.body, 0)}"
        return f"({s})" if _level > 0 else s
    if isinstance(f, CarrierExists):
        s = f"exists {f.var} . {to_text(f.body, 0)}"
        return f"({s})" if _level > 0 else s
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<arrow>->)
      | (?P<and>/\\)
      | (?P<or>\\/)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<punct>[()=.,~])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"forall", "exists", "in"}
_VAR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text, sig):
        self.tokens = _tokenize(text)
        self.sig = sig
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise FormulaSyntaxError(message, tok.line, tok.col)

    def expect(self, text):
        t = self.next()
        if t.text != text:
            self.fail(f"expected {text!r}, found {(t.text or 'end of input')!r}", t)
        return t

    def parse(self):
        f = self.formula()
        if self.peek().kind != "eof":
            self.fail(f"trailing input {self.peek().text!r}")
        return f

    def formula(self):
        left = self.or_level()
        if self.peek().text == "->":
            tok = self.next()
            right = self.formula()  # right associative
            return Imp(left, right, pos=(tok.line, tok.col))
        return left

    def or_level(self):
        left = self.and_level()
        while self.peek().kind == "or":
            tok = self.next()
            left = Or(left, self.and_level(), pos=(tok.line, tok.col))
        return left

    def and_level(self):
        left = self.unary()
        while self.peek().kind == "and":
            tok = self.next()
            left = And(left, self.unary(), pos=(tok.line, tok.col))
        return left

    def unary(self):
        t = self.peek()
        if t.text == "~":
            self.next()
            return Not(self.unary(), pos=(t.line, t.col))
        if t.text == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if t.text in ("forall", "exists"):
            return self.quantifier()
        return self.atomic()

    def quantifier(self):
        tok = self.next()
        var_tok = self.next()
        if var_tok.kind != "ident" or var_tok.text in _KEYWORDS:
            self.fail("expected a variable after the quantifier", var_tok)
        var = var_tok.text
        if not _VAR_RE.match(var) or var in self.sig.functions or var in self.sig.predicates:
            self.fail(f"{var!r} cannot be a bound variable", var_tok)
        bound = None
        if self.peek().text == "in":
            self.next()
            bound = self.term()
        self.expect(".")
        body = self.formula()
        pos = (tok.line, tok.col)
        if tok.text == "forall":
            if bound is None:
                return CarrierForall(var, body, pos=pos)
            return BoundedForall(var, bound, body, pos=pos)
        if bound is None:
            return CarrierExists(var, body, pos=pos)
        return BoundedExists(var, bound, body, pos=pos)

    def atomic(self):
        t = self.peek()
        if t.kind == "ident" and t.text in self.sig.predicates:
            tok = self.next()
            args = self.arg_list()
            want = self.sig.predicates[tok.text]
            if len(args) != want:
                raise ArityError(
                    f"predicate {tok.text!r} expects {want} arguments, got {len(args)}"
                )
            return Pred(tok.text, tuple(args), pos=(tok.line, tok.col))
        left = self.term()
        op = self.next()
        if op.text == "in":
            return Mem(left, self.term(), pos=(op.line, op.col))
        if op.text == "=":
            return Eq(left, self.term(), pos=(op.line, op.col))
        self.fail(f"expected 'in' or '=', found {(op.text or 'end of input')!r}", op)

    def arg_list(self):
        self.expect("(")
        args = []
        if self.peek().text != ")":
            args.append(self.term())
            while self.peek().text == ",":
                self.next()
                args.append(self.term())
        self.expect(")")
        return args

    def term(self):
        t = self.next()
        if t.kind != "ident" or t.text in _KEYWORDS:
            self.fail(f"expected a term, found {(t.text or 'end of input')!r}", t)
        name = t.text
        pos = (t.line, t.col)
        if self.peek().text == "(":
            if name not in self.sig.functions:
                raise UnknownSymbol(f"{name!r} is not a declared function symbol")
            args = self.arg_list()
            want = self.sig.functions[name]
            if len(args) != want:
                raise ArityError(
                    f"function {name!r} expects {want} arguments, got {len(args)}"
                )
            return App(name, tuple(args), pos=pos)
        if name in self.sig.functions:
            if self.sig.functions[name] != 0:
                raise ArityError(f"function {name!r} needs arguments")
            return Const(name, pos=pos)
        if not _VAR_RE.match(name):
            raise UnknownSymbol(f"{name!r} is neither a variable nor a known symbol")
        return Var(name, pos=pos)


def parse(text, sig=EMPTY_SIGNATURE):
    """Parse formula text; round-trips with ``to_text`` up to whitespace."""
    return _Parser(text, sig).parse()


# ---------------------------------------------------------------------------
# stock formulas used across the library

def subset_of(small, big):
    """forall t in small . t in big"""
    return BoundedForall("t_b", Var(small), Mem(Var("t_b"), Var(big)))


def _singleton_is(s, x):
    # s = {x}
    return And(
        Mem(Var(x), Var(s)),
        BoundedForall("t_1", Var(s), Eq(Var("t_1"), Var(x))),
    )


def _doubleton_is(d, x, y):
    # d = {x, y}
    return And(
        And(Mem(Var(x), Var(d)), Mem(Var(y), Var(d))),
        BoundedForall(
            "t_2", Var(d), Or(Eq(Var("t_2"), Var(x)), Eq(Var("t_2"), Var(y)))
        ),
    )


def kuratowski_pair_is(p, x, y):
    """p = {{x},{x,y}}, spelled with bounded quantifiers only."""
    inner = And(
        And(_singleton_is("s_p", x), _doubleton_is("d_p", x, y)),
        BoundedForall(
            "t_3", Var(p), Or(Eq(Var("t_3"), Var("s_p")), Eq(Var("t_3"), Var("d_p")))
        ),
    )
    return BoundedExists("s_p", Var(p), BoundedExists("d_p", Var(p), inner))


def pair_in_graph(g, x, y):
    """exists p in g . p = (x, y)"""
    return BoundedExists("p_g", Var(g), kuratowski_pair_is("p_g", x, y))


def function_between(g, dom, cod):
    """g is the graph of a function from dom to cod, as a bounded formula."""
    graph_ok = BoundedForall(
        "p_f",
        Var(g),
        BoundedExists(
            "x_f",
            Var(dom),
            BoundedExists("y_f", Var(cod), kuratowski_pair_is("p_f", "x_f", "y_f")),
        ),
    )
    total = BoundedForall(
        "x_f",
        Var(dom),
        BoundedExists("y_f", Var(cod), pair_in_graph(g, "x_f", "y_f")),
    )
    unique = BoundedForall(
        "x_f",
        Var(dom),
        BoundedForall(
            "y_f",
            Var(cod),
            BoundedForall(
                "z_f",
                Var(cod),
                Imp(
                    And(pair_in_graph(g, "x_f", "y_f"), pair_in_graph(g, "x_f", "z_f")),
                    Eq(Var("y_f"), Var("z_f")),
                ),
            ),
        ),
    )
    return And(And(graph_ok, total), unique)


def is_transitive(x):
    return BoundedForall(
        "y_o", Var(x), BoundedForall("t_o", Var("y_o"), Mem(Var("t_o"), Var(x)))
    )


def is_eps_total(x):
    tri = Or(
        Or(Mem(Var("u_o"), Var("v_o")), Eq(Var("u_o"), Var("v_o"))),
        Mem(Var("v_o"), Var("u_o")),
    )
    return BoundedForall("u_o", Var(x), BoundedForall("v_o", Var(x), tri))


def is_ordinal_formula(x):
    """Transitive and totally ordered by membership; bounded throughout."""
    return And(is_transitive(x), is_eps_total(x))


def _meet_is(c, a, b):
    # c = a /\ b for sets coded as sets of atom indices: c = a intersect b
    return And(
        And(subset_of(c, a), subset_of(c, b)),
        BoundedForall(
            "t_m",
            Var(a),
            Imp(Mem(Var("t_m"), Var(b)), Mem(Var("t_m"), Var(c))),
        ),
    )


def _complement_is(c, b, one):
    # c = one \ b
    inside = BoundedForall(
        "t_c",
        Var(c),
        And(Mem(Var("t_c"), Var(one)), Not(Mem(Var("t_c"), Var(b)))),
    )
    covers = BoundedForall(
        "t_c", Var(one), Or(Mem(Var("t_c"), Var(b)), Mem(Var("t_c"), Var(c)))
    )
    return And(inside, covers)


def is_ultrafilter(psi, carrier, one):
    """psi is an ultrafilter on the carrier of atom-index codes.

    Relies on the coding of algebra elements as sets of atom indices, under
    which the order is inclusion, meet is intersection and complement is the
    difference from the top code.
    """
    proper = BoundedForall(
        "z_u", Var(psi), BoundedExists("t_u", Var("z_u"), Eq(Var("t_u"), Var("t_u")))
    )
    inside = BoundedForall("z_u", Var(psi), Mem(Var("z_u"), Var(carrier)))
    upward = BoundedForall(
        "x_u",
        Var(psi),
        BoundedForall(
            "y_u",
            Var(carrier),
            Imp(subset_of("x_u", "y_u"), Mem(Var("y_u"), Var(psi))),
        ),
    )
    meets = BoundedForall(
        "x_u",
        Var(psi),
        BoundedForall(
            "y_u",
            Var(psi),
            BoundedForall(
                "w_u",
                Var(carrier),
                Imp(_meet_is("w_u", "x_u", "y_u"), Mem(Var("w_u"), Var(psi))),
            ),
        ),
    )
    prime = BoundedForall(
        "y_u",
        Var(carrier),
        Or(
            Mem(Var("y_u"), Var(psi)),
            BoundedExists(
                "w_u",
                Var(carrier),
                And(_complement_is("w_u", "y_u", one), Mem(Var("w_u"), Var(psi))),
            ),
        ),
    )
    return And(And(And(proper, inside), And(upward, meets)), prime)
