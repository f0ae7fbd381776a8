"""Boolean-metric sets and algebraic systems over them.

A BSet is a finite carrier with an algebra-valued distance satisfying the
identity, symmetry and triangle axioms (triangle with join in place of
addition).  A BSystem adds contractive operation tables and algebra-valued
predicate tables for a finite signature; its formulas are evaluated to truth
values by the usual recursion, with carrier quantifiers turning into big
meets and joins over the carrier.  Over a discrete metric with two-valued
tables everything collapses to ordinary model checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hf import ordinal
from .balg import Partition, big_join
from .errors import (
    AlgebraMismatch,
    InternalInconsistency,
    LengthMismatch,
    MemNotInSignature,
    MetricAxiomViolation,
    RankInsufficient,
    SignatureMismatch,
    UnboundVariable,
    UnknownSymbol,
)
from .formula import (
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
    Var,
)


class BSet:
    """A carrier with a Boolean-valued metric; validated at construction."""

    __slots__ = ("alg", "carrier", "_index", "_d")

    def __init__(self, alg, carrier, metric):
        self.alg = alg
        self.carrier = tuple(carrier)
        if not self.carrier:
            raise MetricAxiomViolation("identity", "empty carrier")
        self._index = {x: i for i, x in enumerate(self.carrier)}
        if len(self._index) != len(self.carrier):
            raise MetricAxiomViolation("identity", "duplicate carrier labels")
        self._d = dict(metric)
        self._validate()

    def _validate(self):
        n = len(self.carrier)
        for i in range(n):
            for j in range(n):
                v = self._d.get((i, j))
                if v is None or v.alg is not self.alg:
                    raise AlgebraMismatch("metric matrix incomplete or foreign")
        for i in range(n):
            for j in range(n):
                if (i == j) != self._d[i, j].is_zero:
                    raise MetricAxiomViolation(
                        "identity", (self.carrier[i], self.carrier[j])
                    )
                if self._d[i, j] != self._d[j, i]:
                    raise MetricAxiomViolation(
                        "symmetry", (self.carrier[i], self.carrier[j])
                    )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not self._d[i, j].leq(self._d[i, k] | self._d[k, j]):
                        raise MetricAxiomViolation(
                            "triangle",
                            (self.carrier[i], self.carrier[j], self.carrier[k]),
                        )

    def index(self, x):
        if x not in self._index:
            raise KeyError(f"{x!r} is not in the carrier")
        return self._index[x]

    def d(self, x, y):
        return self._d[self.index(x), self.index(y)]

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return f"BSet(|X|={len(self.carrier)}, alg={self.alg.name})"


def make_bset(alg, carrier=None, metric=None, preset=None) -> BSet:
    """Build a BSet from an explicit metric or a preset.

    Presets: ``"discrete"`` (distance one off the diagonal) and
    ``"symmdiff"`` (carrier is the whole algebra, distance the symmetric
    difference).
    """
    if preset == "discrete":
        carrier = tuple(carrier)
        metric = {
            (i, j): alg.zero if i == j else alg.one
            for i in range(len(carrier))
            for j in range(len(carrier))
        }
        return BSet(alg, carrier, metric)
    if preset == "symmdiff":
        carrier = tuple(alg.elements())
        metric = {
            (i, j): a ^ b
            for i, a in enumerate(carrier)
            for j, b in enumerate(carrier)
        }
        return BSet(alg, carrier, metric)
    if preset is not None:
        raise ValueError(f"unknown preset {preset!r}")
    if isinstance(metric, dict) and metric and isinstance(next(iter(metric))[0], int):
        return BSet(alg, carrier, metric)
    carrier = tuple(carrier)
    index = {x: i for i, x in enumerate(carrier)}
    by_index = {(index[x], index[y]): v for (x, y), v in metric.items()}
    return BSet(alg, carrier, by_index)


def mix_in_bset(X: BSet, parts, xs):
    """The unique carrier element x with b_i /\\ d(x, x_i) = 0 for every i,
    or None when no mixing exists.  Finding two candidates would contradict
    the uniqueness argument, so it raises."""
    if not isinstance(parts, Partition):
        parts = Partition(X.alg, parts)
    xs = list(xs)
    if len(parts) != len(xs):
        raise LengthMismatch(f"{len(parts)} blocks vs {len(xs)} elements")
    candidates = []
    for x in X.carrier:
        if all((b & X.d(x, xi)).is_zero for b, xi in zip(parts, xs)):
            candidates.append(x)
    if len(candidates) > 1:
        raise InternalInconsistency(f"two mixings found: {candidates[:2]!r}")
    return candidates[0] if candidates else None


def mix_set(X: BSet, A):
    """All mixings of families from A over all partitions of unity.

    Partitions with more blocks than atoms only repeat blocks as zero, so it
    suffices to mix the families indexed by functions from atoms to A.
    """
    A = list(A)
    out = set()
    if not A:
        return out
    n = X.alg.atom_count
    for assignment in itertools.product(range(len(A)), repeat=n):
        blocks = []
        family = []
        for k in range(len(A)):
            mask = 0
            for q in range(n):
                if assignment[q] == k:
                    mask |= 1 << q
            blocks.append(X.alg.element(mask))
            family.append(A[k])
        m = mix_in_bset(X, Partition(X.alg, blocks), family)
        if m is not None:
            out.add(m)
    return out


def cyc(X: BSet, A):
    """Least mixing-closed superset of A: iterate mix_set to a fixpoint."""
    current = set(A)
    while True:
        grown = current | mix_set(X, current)
        if grown == current:
            return current
        current = grown


def is_universally_complete(X: BSet) -> bool:
    """True iff every family-by-partition mixing exists in the carrier."""
    n = X.alg.atom_count
    for assignment in itertools.product(range(len(X.carrier)), repeat=n):
        blocks, family = [], []
        for k in set(assignment):
            mask = 0
            for q in range(n):
                if assignment[q] == k:
                    mask |= 1 << q
            blocks.append(X.alg.element(mask))
            family.append(X.carrier[k])
        if mix_in_bset(X, Partition(X.alg, blocks), family) is None:
            return False
    return True


def is_contractive(X: BSet, Y, table) -> bool:
    """Check the contraction inequality for an operation or predicate table.

    Keys are argument tuples over X's carrier (bare labels for arity one).
    With ``Y`` a BSet the values are carrier elements of Y and the distance
    is measured there; with ``Y`` None the values are algebra elements and
    the gap is their symmetric difference (predicate case).
    """
    items = [(k if isinstance(k, tuple) else (k,), v) for k, v in table.items()]
    for args1, v1 in items:
        for args2, v2 in items:
            if len(args1) != len(args2):
                raise LengthMismatch("mixed arities in one table")
            bound = big_join(X.alg, [X.d(a, b) for a, b in zip(args1, args2)])
            gap = v1 ^ v2 if Y is None else Y.d(v1, v2)
            if not gap.leq(bound):
                return False
    return True


class BSystem:
    """A BSet plus contractive interpretation tables for a finite signature.

    Zero-ary operations are stored as bare carrier elements and zero-ary
    predicates as bare algebra elements.
    """

    def __init__(self, base: BSet, sig, operations, predicates):
        self.base = base
        self.sig = sig
        self.operations = dict(operations)
        self.predicates = dict(predicates)
        self._validate()

    def _validate(self):
        for name, arity in self.sig.functions.items():
            if name not in self.operations:
                raise UnknownSymbol(f"operation {name!r} has no table")
            table = self.operations[name]
            if arity == 0:
                self.base.index(table)
                continue
            for args in itertools.product(self.base.carrier, repeat=arity):
                if args not in table:
                    raise UnknownSymbol(f"operation {name!r} is partial at {args!r}")
            if not is_contractive(self.base, self.base, table):
                raise MetricAxiomViolation("contraction", name)
        for name, arity in self.sig.predicates.items():
            if name not in self.predicates:
                raise UnknownSymbol(f"predicate {name!r} has no table")
            table = self.predicates[name]
            if arity == 0:
                if table.alg is not self.base.alg:
                    raise AlgebraMismatch("zero-ary predicate from a foreign algebra")
                continue
            for args in itertools.product(self.base.carrier, repeat=arity):
                if args not in table:
                    raise UnknownSymbol(f"predicate {name!r} is partial at {args!r}")
            if not is_contractive(self.base, None, table):
                raise MetricAxiomViolation("contraction", name)

    def op(self, name, args):
        table = self.operations[name]
        return table if not args else table[tuple(args)]

    def pred(self, name, args):
        table = self.predicates[name]
        return table if not args else table[tuple(args)]


def _term_value(S: BSystem, t, assignment):
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnboundVariable(f"variable {t.name!r} has no value")
        return assignment[t.name]
    if isinstance(t, Const):
        if t.symbol not in S.sig.functions:
            raise UnknownSymbol(f"constant {t.symbol!r} not in the signature")
        return S.op(t.symbol, ())
    if isinstance(t, App):
        if t.symbol not in S.sig.functions:
            raise UnknownSymbol(f"function {t.symbol!r} not in the signature")
        args = [_term_value(S, a, assignment) for a in t.args]
        return S.op(t.symbol, args)
    raise TypeError(f"not a term: {t!r}")


def eval_bsystem(S: BSystem, f, assignment):
    """The Boolean truth value of a signature formula in the system.

    Equality atoms evaluate to the complement of the distance; carrier
    quantifiers run over the whole carrier.  Membership atoms, and the
    bounded quantifiers that desugar through membership, are rejected.
    """
    alg = S.base.alg
    if isinstance(f, Mem):
        raise MemNotInSignature("membership atoms have no meaning here")
    if isinstance(f, (BoundedForall, BoundedExists)):
        raise MemNotInSignature("bounded quantifiers need membership semantics")
    if isinstance(f, Eq):
        b0 = _term_value(S, f.left, assignment)
        b1 = _term_value(S, f.right, assignment)
        return ~S.base.d(b0, b1)
    if isinstance(f, Pred):
        if f.symbol not in S.sig.predicates:
            raise UnknownSymbol(f"predicate {f.symbol!r} not in the signature")
        args = [_term_value(S, a, assignment) for a in f.args]
        return S.pred(f.symbol, args)
    if isinstance(f, Not):
        return ~eval_bsystem(S, f.body, assignment)
    if isinstance(f, And):
        return eval_bsystem(S, f.left, assignment) & eval_bsystem(S, f.right, assignment)
    if isinstance(f, Or):
        return eval_bsystem(S, f.left, assignment) | eval_bsystem(S, f.right, assignment)
    if isinstance(f, Imp):
        return eval_bsystem(S, f.left, assignment).imp(
            eval_bsystem(S, f.right, assignment)
        )
    if isinstance(f, (CarrierForall, CarrierExists)):
        inner = dict(assignment)
        acc = alg.one if isinstance(f, CarrierForall) else alg.zero
        for a in S.base.carrier:
            inner[f.var] = a
            v = eval_bsystem(S, f.body, inner)
            acc = acc & v if isinstance(f, CarrierForall) else acc | v
        return acc
    raise TypeError(f"not a formula: {f!r}")


@dataclass
class HomReport:
    """Classification of a map between systems of one signature."""

    metric_contractive: bool   # (a), as an inequality
    constants_match: bool      # (b)
    operations_commute: bool   # (c)
    predicates_dominated: bool # (d), as an inequality
    strong_inequality: bool
    metric_equal: bool
    predicates_equal: bool

    @property
    def is_homomorphism(self):
        return (
            self.metric_contractive
            and self.constants_match
            and self.operations_commute
            and self.predicates_dominated
        )

    @property
    def is_strong(self):
        return self.is_homomorphism and self.strong_inequality

    @property
    def is_isomorphism(self):
        return self.is_homomorphism and self.metric_equal and self.predicates_equal

    @property
    def label(self):
        if self.is_isomorphism:
            return "iso"
        if self.is_strong:
            return "strong"
        if self.is_homomorphism:
            return "hom"
        return "none"


def check_homomorphism(h, S1: BSystem, S2: BSystem) -> HomReport:
    """Check the homomorphism conditions, the strong inequality, and the
    equality-strengthened conditions for isomorphism."""
    if S1.sig.functions != S2.sig.functions or S1.sig.predicates != S2.sig.predicates:
        raise SignatureMismatch("systems have different signatures")
    A, D = S1.base, S2.base
    metric_contr = True
    metric_eq = True
    for a1 in A.carrier:
        for a2 in A.carrier:
            da = A.d(a1, a2)
            dd = D.d(h[a1], h[a2])
            if not dd.leq(da):
                metric_contr = False
            if dd != da:
                metric_eq = False
    constants = True
    commute = True
    for name, arity in S1.sig.functions.items():
        if arity == 0:
            if h[S1.op(name, ())] != S2.op(name, ()):
                constants = False
            continue
        for args in itertools.product(A.carrier, repeat=arity):
            if h[S1.op(name, args)] != S2.op(name, [h[a] for a in args]):
                commute = False
    dominated = True
    preds_eq = True
    for name, arity in S1.sig.predicates.items():
        if arity == 0:
            p1, p2 = S1.pred(name, ()), S2.pred(name, ())
            if not p1.leq(p2):
                dominated = False
            if p1 != p2:
                preds_eq = False
            continue
        for args in itertools.product(A.carrier, repeat=arity):
            p1 = S1.pred(name, args)
            p2 = S2.pred(name, [h[a] for a in args])
            if not p1.leq(p2):
                dominated = False
            if p1 != p2:
                preds_eq = False
    strong = True
    for name, arity in S1.sig.predicates.items():
        if arity == 0:
            continue
        for dargs in itertools.product(D.carrier, repeat=arity):
            target = S2.pred(name, dargs)
            cover = D.alg.zero
            for aargs in itertools.product(A.carrier, repeat=arity):
                term = S1.pred(name, aargs)
                for dk, ak in zip(dargs, aargs):
                    term = term & ~D.d(dk, h[ak])
                cover = cover | term
            if not target.leq(cover):
                strong = False
    return HomReport(
        metric_contr, constants, commute, dominated, strong, metric_eq, preds_eq
    )


@dataclass
class Realization:
    """Boolean-valued realization of a BSet: the injection and the internal
    set whose descent consists of the mixings of the injected carrier."""

    iota: dict
    internal_set: object
    class_indices: dict  # atom index -> carrier label -> class code


def realize_bset(X: BSet, universe, fragment_rank=None) -> Realization:
    """Realize a BSet so that d(x, y) = [[iota(x) != iota(y)]] exactly.

    Per atom, the carrier is quotiented by "distance avoids the atom"; the
    classes are coded by the least member's carrier position as a von
    Neumann numeral, and iota(x) mixes the standard names of x's class codes
    over the atom partition.  A discrete metric yields singleton classes, so
    iota degenerates to standard names of carrier positions.
    """
    if universe.alg is not X.alg:
        raise AlgebraMismatch("realization universe must share the algebra")
    n = X.alg.atom_count
    class_indices = {}
    for q in range(n):
        labels = {}
        for x in X.carrier:
            for y in X.carrier:
                if not (X.d(x, y).mask >> q) & 1:
                    labels[x] = min(
                        labels.get(x, len(X.carrier)), X.index(y)
                    )
        class_indices[q] = labels
    max_code = max(v for labels in class_indices.values() for v in labels.values())
    if fragment_rank is not None and fragment_rank < max_code + 1:
        raise RankInsufficient(
            f"class codes need rank {max_code + 1}, fragment rank is {fragment_rank}"
        )
    iota = {}
    for x in X.carrier:
        # block for each distinct class code: the atoms where it codes x
        blocks = {}
        for q in range(n):
            name = universe.canonical_name(ordinal(class_indices[q][x]))
            blocks[name] = blocks.get(name, X.alg.zero) | X.alg.atom(q)
        member = universe.mix(
            Partition(X.alg, list(blocks.values())), list(blocks.keys())
        )
        iota[x] = universe.normalize(member)
    internal = universe.make(
        {m: X.alg.one for m in dict.fromkeys(iota.values())}
    )
    return Realization(iota, internal, class_indices)
