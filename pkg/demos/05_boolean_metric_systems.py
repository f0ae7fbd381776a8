"""Boolean metrics, mixings in abstract carriers, and algebraic systems.

A carrier with an algebra-valued distance supports the same mixing calculus
as the set universe, except mixings may fail to exist.  Adding contractive
operation and predicate tables produces an algebraic system whose formulas
take algebra-valued truth degrees; over a discrete metric with two-valued
tables this is ordinary model theory.
"""

from bvm import BoolAlg, Partition, Universe
from bvm.bsets import (
    BSystem,
    check_homomorphism,
    cyc,
    eval_bsystem,
    is_contractive,
    is_universally_complete,
    make_bset,
    mix_in_bset,
    realize_bset,
)
from bvm.formula import Signature, parse

B = BoolAlg(2)
p, q = B.atom(0), B.atom(1)

# the algebra over itself, with symmetric difference as the distance
X = make_bset(B, preset="symmdiff")
print("d(p, 1) =", X.d(p, B.one))

# mixing solves b_i & d(x, x_i) = 0; here the solution is q
print("mix (p,q) of (0,1):", mix_in_bset(X, Partition(B, [p, q]), [B.zero, B.one]))
print("universally complete:", is_universally_complete(X))
print("cyclic hull of {0,1}:", sorted(repr(c) for c in cyc(X, {B.zero, B.one})))

# a discrete two-point carrier misses most mixings
D = make_bset(B, ["x1", "x2"], preset="discrete")
print("discrete mix (p,q):", mix_in_bset(D, Partition(B, [p, q]), ["x1", "x2"]))

# implication is a contractive predicate on the symmetric-difference carrier
imp_table = {(a, b): a.imp(b) for a in X.carrier for b in X.carrier}
print("implication contractive:", is_contractive(X, None, imp_table))

# an ordered-algebra view of the carrier: 'le' is the implication degree
sig = Signature({"bot": 0}, {"le": 2})
S = BSystem(X, sig, {"bot": B.zero}, {"le": imp_table})
print("|forall x . le(bot, x)| =",
      eval_bsystem(S, parse("forall x . le(bot, x)", sig), {}))
print("|exists x . forall y . le(y, x)| =",
      eval_bsystem(S, parse("exists x . forall y . le(y, x)", sig), {}))

# the identity is an isomorphism and every isomorphism is a homomorphism
print("identity classified as:",
      check_homomorphism({x: x for x in X.carrier}, S, S).label)

# realization: the carrier embeds into the set universe so that the metric
# is exactly the negated equality degree of the images
U = Universe(B)
R = realize_bset(X, U)
for a in (p, B.one):
    for b in (q, B.zero):
        assert X.d(a, b) == ~U.truth_eq(R.iota[a], R.iota[b])
print("realization recovers the metric exactly on sample pairs")
