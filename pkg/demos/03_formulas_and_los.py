"""Evaluating first-order set formulas, and the two-model cross-check.

The same formula language evaluates two ways: to an algebra element over
Boolean-valued sets, and to a plain bool over hereditarily finite sets.  At
each atom of the algebra a Boolean-valued set collapses to an ordinary set,
and the truth value is exactly the join of the atoms whose collapse
satisfies the formula classically.  That equation is the workhorse check of
the whole library.
"""

from bvm import BoolAlg, Universe, parse
from bvm.evaluator import (
    check_los,
    check_restricted_transfer,
    eval_bv,
    eval_classical,
    find_max_witness,
)
from bvm.hf import EMPTY, hf

B = BoolAlg(2)
p, q = B.atom(0), B.atom(1)
U = Universe(B)
e = U.empty
one = U.canonical_name(hf(EMPTY))
y = U.make({e: p})

# parse once, evaluate anywhere
f = parse("forall u in y . u = x")
print("[[forall u in y . u = x]] with x={} :", eval_bv(f, {"x": e, "y": y}, U))
print("[[x in y]] =", eval_bv(parse("x in y"), {"x": e, "y": y}, U))

# classical evaluation over ordinary sets
print("classically, {} in {{}}:",
      eval_classical(parse("x in y"), {"x": EMPTY, "y": hf(EMPTY)}))

# the fiber comparison, atom by atom
report = check_los(parse("x in y"), {"x": e, "y": y}, U)
print("per-atom satisfaction:", report.per_atom)
print("join of satisfied atoms:", report.satisfied_atoms, "== truth:", report.truth)
assert report.holds

# restricted transfer: names are faithful for bounded formulas
t = check_restricted_transfer(
    parse("forall u in x . exists v in y . u in v"),
    {"x": hf(EMPTY), "y": hf(hf(EMPTY))}, U,
)
print("transfer: classical", t.classical, "| boolean truth", t.boolean_truth)

# the fragment-relative maximum: stitch the best witness together from
# pieces of the fragment by mixing
fragment = U.enumerate_universe(2)
target = U.make({e: p, one: q})
witness, value = find_max_witness(parse("x in y"), "x", {"y": target}, fragment, U)
print("sup of [[x in y]] over the fragment:", value)
print("witness attains it:", eval_bv(parse("x in y"), {"x": witness, "y": target}, U))

# quantifying over the whole universe is rejected; a finite carrier must be
# supplied explicitly
try:
    eval_bv(parse("forall v . v = v"), {}, U)
except Exception as exc:
    print("carrier quantifier without a fragment:", type(exc).__name__)
print("with the fragment as carrier:",
      eval_bv(parse("forall v . v = v"), {}, U, fragment=fragment))
