"""Boolean-valued sets and their truth values.

A set here is a finite map from previously built sets to algebra elements:
"it contains each child with that probability".  Membership and equality get
algebra-valued truth degrees by the standard mutual recursion, and ordinary
(hereditarily finite) sets embed via standard names with all values one.
"""

from bvm import BoolAlg, Partition, Universe
from bvm.hf import EMPTY, hf, ordinal

B = BoolAlg(2)
p, q = B.atom(0), B.atom(1)
U = Universe(B)

# standard names: the canonical copy of an ordinary set
e = U.canonical_name(EMPTY)                 # the internal empty set
one = U.canonical_name(hf(EMPTY))           # the internal {0}
print("name of {}:", e, " name of {{}}:", one)

# a genuinely fuzzy set: contains the empty set "with probability p"
y = U.make({e: p})
print("[[{} in y]] =", U.truth_mem(e, y))          # p
print("[[y = {}]] =", U.truth_eq(y, e))            # ~p
print("[[y = y]] =", U.truth_eq(y, y))             # always 1

# normalization drops vanishing entries and merges duplicate children
ghost = U.make({e: B.zero})
print("normalize({{}: 0}) is the empty name:", U.normalize(ghost) is e)

# scaling and mixing: the gluing machinery
print("[[{} in q*y]] =", U.truth_mem(e, U.scale(q, y)))   # q & p = 0
m = U.mix(Partition(B, [p, q]), [e, one])
print("mix by (p,q) of ({}, {{}}):")
print("  [[m = {}]]  =", U.truth_eq(m, e))     # exactly p: the family is distinct
print("  [[m = {{}}]] =", U.truth_eq(m, one))  # exactly q

# the separated fragment: every truth class once, closed under mixing
fragment = U.enumerate_universe(2)
print("level-2 fragment:", fragment)
for x in fragment:
    for z in fragment:
        if x is not z:
            assert not U.truth_eq(x, z).is_one
print("fragment members are pairwise internally distinct")

# the classical fiber at an atom: collapse to an ordinary set
print("fiber of y at a1:", U.collapse_at_atom(0, y))   # {{}}
print("fiber of y at a2:", U.collapse_at_atom(1, y))   # {}

# internal ordinals: truth value of the ordinal formula, plus the
# decomposition of any internal ordinal into standard ones
truth, decomposition = U.ordinal_ops(m, rank_bound=3)
print("m is an ordinal with truth", truth)
print("decomposition:", decomposition.partition, [repr(a) for a in decomposition.ordinals])

two = U.canonical_name(ordinal(2))
truth, decomposition = U.ordinal_ops(two, rank_bound=3)
print("2-name: truth", truth, "blocks", decomposition.partition.blocks)
