"""Tour of the finite Boolean algebra engine.

Every finite complete Boolean algebra is the powerset of its atoms, so an
algebra here is just "n named atoms" and an element is the set of atoms
below it.  All the lattice structure falls out of bit masks.
"""

from bvm import BoolAlg, Partition, big_join, big_meet, is_partition, make_hom

# the four-element algebra: two atoms a1, a2
B = BoolAlg(2)
p, q = B.atom(0), B.atom(1)
print("algebra:", B)
print("elements:", B.elements())

# meets, joins, complements, implication
print("p & q =", p & q)            # 0: the atoms are disjoint
print("p | q =", p | q)            # 1: together they exhaust the algebra
print("~p    =", ~p)               # the other atom
print("p -> q =", p.imp(q))        # ~p | q collapses to q here
print("p <= 1:", p <= B.one)

# symmetric difference doubles as the distance between elements
print("p ^ 1 =", p ^ B.one)

# big meets and joins, with the empty-aggregate conventions
print("meet [] =", big_meet(B, []))          # 1
print("join [] =", big_join(B, []))          # 0
print("meet [p,1,p] =", big_meet(B, [p, B.one, p]))

# partitions of unity: pairwise disjoint, join one; zero blocks are fine
print("is_partition [p,q]:", is_partition(B, [p, q]))
print("is_partition [p,p]:", is_partition(B, [p, p]))
print("is_partition [1,0]:", is_partition(B, [B.one, B.zero]))
parts = Partition(B, [p, q])
print("partition:", parts)

# homomorphisms: atom permutations (automorphisms) and projections onto
# the two-element algebra at a chosen atom
swap = make_hom(B, B, ("permutation", [1, 0]))
print("swap(p) =", swap(p))
proj = make_hom(B, None, ("projection", "a1"))
print("projection at a1: p ->", proj(p), ", q ->", proj(q))

# homomorphisms preserve the whole structure
for a in B.elements():
    for b in B.elements():
        assert swap(a & b) == swap(a) & swap(b)
        assert swap(~a) == ~swap(a)
print("swap preserves meets and complements on all pairs")
