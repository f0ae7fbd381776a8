"""Moving material between ordinary collections and the set universe.

Descent collects the fragment members that belong to an internal set with
truth value one; ascent packages a finite collection as an internal set.
Round trips obey the arrow cancellation rules: up-then-down grows a
collection to its mixing closure, down-then-up returns the internal set.
Extensionality is what a map must satisfy to ascend.
"""

from bvm import BoolAlg, Universe
from bvm.arrows import (
    ExtMap,
    ascend_function,
    ascent,
    descend_function,
    descend_two_point,
    descent,
    internal_pair,
    is_extensional,
    mix_closure,
)
from bvm.hf import EMPTY, hf

B = BoolAlg(2)
p, q = B.atom(0), B.atom(1)
U = Universe(B)
fragment = U.enumerate_universe(3)
e = U.canonicalize(U.empty)
one = U.canonicalize(U.canonical_name(hf(EMPTY)))

# ascent and descent of a two-element collection
two = ascent([e, one], U)
down = descent(two, fragment, U)
print("descent of the ascended pair has", len(down), "members")
closure = mix_closure([e, one], fragment, U)
print("its mixing closure has", len(closure), "members")
assert {s.uid for s in down} == {s.uid for s in closure}

# internal Kuratowski pairs collapse to classical pairs at every atom
pair = internal_pair(e, one, U)
print("fiber of (e, one) at a1:", U.collapse_at_atom(0, pair))

# a map ascends iff it is extensional: equality degrees may only grow
good = ExtMap.function({e: one, one: e})
print("swap map extensional:", is_extensional(good, U))
bad = ExtMap.function({e: e, U.make({U.empty: p}): one})
print("a map splitting nearly-equal sources extensional:", is_extensional(bad, U))

graph = ascend_function(good, U)
dom = ascent([e, one], U)
back = descend_function(graph, dom, dom, fragment, U)
print("descended map recovers the swap on", len(back), "keys")

# the two-point algebra comes back down as a copy of the ground algebra
tp = descend_two_point(U)
for b in B.elements():
    assert U.truth_eq(tp.chi[b], tp.one) == b
    assert U.truth_eq(tp.chi[b], tp.zero) == ~b
print("descended two-point algebra: chi verified for all", len(B.elements()), "elements")
print("chi(p) meet chi(q) is chi(p&q):",
      tp.meet(tp.chi[p], tp.chi[q]) is tp.chi[p & q])
