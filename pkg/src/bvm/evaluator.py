"""Truth-value evaluation over set assignments, plus the cross-check machinery.

Two evaluation modes share one formula language: ``eval_bv`` produces an
algebra element from an assignment of Boolean-valued sets, ``eval_classical``
produces a plain bool from an assignment of hereditarily finite sets.  The
atom-fiber collapse connects the two, and ``check_los`` verifies that the
Boolean truth value is exactly the join of the classically satisfying atoms.

Quantification over the whole universe is not computable and is rejected;
a carrier quantifier is evaluated only against an explicitly supplied finite
fragment, and ``find_max_witness`` provides the fragment-relative maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balg import Elem, Partition
from .errors import (
    EmptyFragment,
    NotRestricted,
    UnboundedQuantifier,
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
    free_vars,
    is_restricted,
    to_text,
)


def _term_bv(t, assignment):
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnboundVariable(f"variable {t.name!r} has no value")
        return assignment[t.name]
    if isinstance(t, (Const, App)):
        raise UnknownSymbol(
            "signature symbols have no interpretation over the set universe"
        )
    raise TypeError(f"not a term: {t!r}")


def eval_bv(f, assignment, universe, fragment=None) -> Elem:
    """Boolean truth value of a formula under a BvSet assignment.

    Bounded quantifiers run over the entries of the bound set, guarded by the
    entry values.  Carrier quantifiers are rejected unless ``fragment`` gives
    them a finite range.
    """
    alg = universe.alg
    if isinstance(f, Mem):
        return universe.truth_mem(_term_bv(f.left, assignment), _term_bv(f.right, assignment))
    if isinstance(f, Eq):
        return universe.truth_eq(_term_bv(f.left, assignment), _term_bv(f.right, assignment))
    if isinstance(f, Pred):
        raise UnknownSymbol("predicate atoms need an algebraic system")
    if isinstance(f, Not):
        return ~eval_bv(f.body, assignment, universe, fragment)
    if isinstance(f, And):
        left = eval_bv(f.left, assignment, universe, fragment)
        if left.is_zero:
            return left
        return left & eval_bv(f.right, assignment, universe, fragment)
    if isinstance(f, Or):
        left = eval_bv(f.left, assignment, universe, fragment)
        if left.is_one:
            return left
        return left | eval_bv(f.right, assignment, universe, fragment)
    if isinstance(f, Imp):
        return eval_bv(f.left, assignment, universe, fragment).imp(
            eval_bv(f.right, assignment, universe, fragment)
        )
    if isinstance(f, BoundedForall):
        z = _term_bv(f.bound, assignment)
        acc = alg.one
        inner = dict(assignment)
        for t, v in z.entries:
            inner[f.var] = t
            acc = acc & v.imp(eval_bv(f.body, inner, universe, fragment))
            if acc.is_zero:
                break
        return acc
    if isinstance(f, BoundedExists):
        z = _term_bv(f.bound, assignment)
        acc = alg.zero
        inner = dict(assignment)
        for t, v in z.entries:
            inner[f.var] = t
            acc = acc | (v & eval_bv(f.body, inner, universe, fragment))
            if acc.is_one:
                break
        return acc
    if isinstance(f, (CarrierForall, CarrierExists)):
        if fragment is None:
            raise UnboundedQuantifier(
                "carrier quantifier has no finite range here; quantification "
                "over the whole universe is rejected"
            )
        inner = dict(assignment)
        if isinstance(f, CarrierForall):
            acc = alg.one
            for u in fragment:
                inner[f.var] = u
                acc = acc & eval_bv(f.body, inner, universe, fragment)
                if acc.is_zero:
                    break
            return acc
        acc = alg.zero
        for u in fragment:
            inner[f.var] = u
            acc = acc | eval_bv(f.body, inner, universe, fragment)
            if acc.is_one:
                break
        return acc
    raise TypeError(f"not a formula: {f!r}")


def _term_hf(t, assignment):
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnboundVariable(f"variable {t.name!r} has no value")
        return assignment[t.name]
    raise UnknownSymbol("classical evaluation handles variables only")


def eval_classical(f, assignment) -> bool:
    """Tarskian satisfaction over hereditarily finite sets."""
    if isinstance(f, Mem):
        return _term_hf(f.left, assignment) in _term_hf(f.right, assignment)
    if isinstance(f, Eq):
        return _term_hf(f.left, assignment) == _term_hf(f.right, assignment)
    if isinstance(f, Pred):
        raise UnknownSymbol("predicate atoms need an algebraic system")
    if isinstance(f, Not):
        return not eval_classical(f.body, assignment)
    if isinstance(f, And):
        return eval_classical(f.left, assignment) and eval_classical(f.right, assignment)
    if isinstance(f, Or):
        return eval_classical(f.left, assignment) or eval_classical(f.right, assignment)
    if isinstance(f, Imp):
        return (not eval_classical(f.left, assignment)) or eval_classical(
            f.right, assignment
        )
    if isinstance(f, BoundedForall):
        z = _term_hf(f.bound, assignment)
        inner = dict(assignment)
        for m in z:
            inner[f.var] = m
            if not eval_classical(f.body, inner):
                return False
        return True
    if isinstance(f, BoundedExists):
        z = _term_hf(f.bound, assignment)
        inner = dict(assignment)
        for m in z:
            inner[f.var] = m
            if eval_classical(f.body, inner):
                return True
        return False
    if isinstance(f, (CarrierForall, CarrierExists)):
        raise NotRestricted("classical evaluation needs a restricted formula")
    raise TypeError(f"not a formula: {f!r}")


@dataclass
class LosReport:
    """Comparison of a Boolean truth value with its classical atom fibers."""

    formula: str
    truth: Elem
    satisfied_atoms: Elem
    per_atom: dict

    @property
    def holds(self):
        return self.truth == self.satisfied_atoms

    @property
    def violating_atoms(self):
        diff = self.truth ^ self.satisfied_atoms
        return diff.atoms()

    def to_json(self):
        return {
            "formula": self.formula,
            "truth": self.truth.to_json(),
            "satisfied_atoms": self.satisfied_atoms.to_json(),
            "per_atom": dict(self.per_atom),
            "holds": self.holds,
            "violating_atoms": list(self.violating_atoms),
        }


def check_los(f, assignment, universe) -> LosReport:
    """Verify that the Boolean truth value equals the join of the atoms whose
    classical fiber satisfies the formula."""
    if not is_restricted(f):
        raise NotRestricted("the fiber comparison needs a restricted formula")
    names = free_vars(f)
    truth = eval_bv(f, assignment, universe)
    mask = 0
    per_atom = {}
    for q, atom_name in enumerate(universe.alg.atom_names):
        hf_assignment = {
            v: universe.collapse_at_atom(q, x)
            for v, x in assignment.items()
            if v in names
        }
        ok = eval_classical(f, hf_assignment)
        per_atom[atom_name] = ok
        if ok:
            mask |= 1 << q
    return LosReport(to_text(f), truth, universe.alg.element(mask), per_atom)


@dataclass
class TransferReport:
    """Classical truth versus Boolean truth of the standard-name translation."""

    formula: str
    classical: bool
    boolean_truth: Elem

    @property
    def holds(self):
        return self.classical == self.boolean_truth.is_one

    def to_json(self):
        return {
            "formula": self.formula,
            "classical": self.classical,
            "boolean_truth": self.boolean_truth.to_json(),
            "holds": self.holds,
        }


def check_restricted_transfer(f, hf_assignment, universe) -> TransferReport:
    """Restricted formulas transfer faithfully under standard names:
    classically true iff the Boolean truth value is one."""
    if not is_restricted(f):
        raise NotRestricted("transfer holds for restricted formulas only")
    classical = eval_classical(f, hf_assignment)
    named = {v: universe.canonical_name(h) for v, h in hf_assignment.items()}
    truth = eval_bv(f, named, universe)
    return TransferReport(to_text(f), classical, truth)


def find_max_witness(f, var, assignment, fragment, universe):
    """Fragment-relative maximum: returns (witness, value) with value the join
    of the formula's truth over the fragment and the witness attaining it.

    The witness is assembled greedily: walk the fragment, give each element
    the part of the remaining target its truth value covers, and mix the
    chosen elements by the resulting partition.  The fragment must be closed
    under mixing for the witness to land back inside it.
    """
    fragment = list(fragment)
    if not fragment:
        raise EmptyFragment("cannot maximize over an empty fragment")
    alg = universe.alg
    values = []
    scope = dict(assignment)
    for u in fragment:
        scope[var] = u
        values.append(eval_bv(f, scope, universe))
    value = alg.zero
    for v in values:
        value = value | v
    remaining = value
    blocks, chosen = [], []
    for u, v in zip(fragment, values):
        if remaining.is_zero:
            break
        c = v & remaining
        if c.is_zero:
            continue
        blocks.append(c)
        chosen.append(u)
        remaining = remaining & ~c
    leftover = ~value
    if not leftover.is_zero:
        blocks.append(leftover)
        chosen.append(fragment[0])
    mixed = universe.mix(Partition(alg, blocks), chosen)
    witness = mixed
    for candidate in fragment:
        if universe.truth_eq(candidate, mixed).is_one:
            witness = candidate
            break
    return witness, value
