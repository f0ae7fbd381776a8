"""Descent and ascent between ordinary collections and the set universe.

``descent`` collects the fragment members that belong to an internal set with
truth value one; ``ascent`` turns a finite collection into the internal set
with constant value one.  The arrow-cancellation identities relating the two
are exercised by the test suite; extensionality is the admission ticket for
ascending a map.

Correspondences (multi-valued maps) are carried through their graphs as
internal sets; a dedicated correspondence calculus is unnecessary at finite
scale.  Uniqueness claims are always read modulo equality truth value one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hf import HFSet
from .balg import Partition
from .errors import NotAFunction, NotExtensional, RankInsufficient
from .evaluator import eval_bv
from .formula import function_between, pair_in_graph
from .universe import BvSet, Universe


def descent(x, fragment, universe) -> list:
    """All fragment members with membership truth value one in x."""
    return [y for y in fragment if universe.truth_mem(y, x).is_one]


def ascent(xs, universe) -> BvSet:
    """The internal set with the given members, each with value one."""
    return universe.make({universe._owned(x): universe.alg.one for x in xs})


def mix_closure(xs, fragment, universe) -> list:
    """Least mixing-closed superset of xs inside the fragment.

    Binary mixings generate all finite ones, so the fixpoint iterates
    two-element mixings over every algebra element.
    """
    fragment = list(fragment)
    index = {}

    def rep_of(s):
        found = index.get(s.uid)
        if found is not None:
            return found
        for candidate in fragment:
            if universe.truth_eq(candidate, s).is_one:
                index[s.uid] = candidate
                return candidate
        raise RankInsufficient("element has no representative in the fragment")

    closed = {}
    for x in xs:
        r = rep_of(x)
        closed[r.uid] = r
    alg = universe.alg
    scalars = [b for b in alg.elements() if not (b.is_zero or b.is_one)]
    changed = True
    while changed:
        changed = False
        members = list(closed.values())
        for x in members:
            for y in members:
                if x is y:
                    continue
                for b in scalars:
                    m = rep_of(universe.mix(Partition(alg, [b, ~b]), [x, y]))
                    if m.uid not in closed:
                        closed[m.uid] = m
                        changed = True
    order = {f.uid: i for i, f in enumerate(fragment)}
    return sorted(closed.values(), key=lambda s: order[s.uid])


@dataclass
class ExtMap:
    """A finite map between collections of sets.

    Keys are BvSets, or hereditarily finite sets in modified mode (they enter
    truth-value computations through their standard names).  Images are
    tuples: singletons for functions, longer for correspondences.
    """

    pairs: tuple
    hf_source: bool = False

    @classmethod
    def function(cls, mapping):
        items = list(mapping.items())
        hf_source = bool(items) and isinstance(items[0][0], HFSet)
        return cls(tuple((k, (v,)) for k, v in items), hf_source)

    @classmethod
    def correspondence(cls, mapping):
        items = list(mapping.items())
        hf_source = bool(items) and isinstance(items[0][0], HFSet)
        return cls(tuple((k, tuple(vs)) for k, vs in items), hf_source)

    @property
    def sources(self):
        return tuple(k for k, _ in self.pairs)

    @property
    def is_function(self):
        return all(len(vs) == 1 for _, vs in self.pairs)

    def image(self, key):
        for k, vs in self.pairs:
            if k == key or k is key:
                return vs
        raise KeyError(key)

    def apply(self, key):
        vs = self.image(key)
        if len(vs) != 1:
            raise NotAFunction("multi-valued at this key")
        return vs[0]

    def __len__(self):
        return len(self.pairs)


def _source_as_bv(f, key, universe):
    return universe.canonical_name(key) if f.hf_source else key


def is_extensional(f: ExtMap, universe) -> bool:
    """Check [[x1 = x2]] <= join over images of [[y1 = y2]] for all source
    pairs; for functions this is [[x1 = x2]] <= [[f(x1) = f(x2)]]."""
    for k1, vs1 in f.pairs:
        b1 = _source_as_bv(f, k1, universe)
        for k2, vs2 in f.pairs:
            b2 = _source_as_bv(f, k2, universe)
            e = universe.truth_eq(b1, b2)
            if e.is_zero:
                continue
            for y1 in vs1:
                bound = universe.alg.zero
                for y2 in vs2:
                    bound = bound | universe.truth_eq(y1, y2)
                if not e.leq(bound):
                    return False
    return True


def internal_tuple(xs, universe) -> BvSet:
    """Iterated Kuratowski pairing with all coefficients one; collapse at any
    atom yields the classical tuple of collapses."""
    xs = [universe._owned(x) for x in xs]
    if not xs:
        raise ValueError("empty tuple has no internal coding here")
    acc = xs[0]
    for x in xs[1:]:
        singleton = ascent([acc], universe)
        doubleton = ascent([acc, x], universe)
        acc = ascent([singleton, doubleton], universe)
    return acc


def internal_pair(x, y, universe) -> BvSet:
    return internal_tuple([x, y], universe)


def ascend_function(f: ExtMap, universe) -> BvSet:
    """The internal graph of an extensional function: the ascent of the set
    of internal pairs (x, f(x)); modified mode pairs names of the keys."""
    if not f.is_function:
        raise NotAFunction("ascend_function needs single-valued images")
    if not is_extensional(f, universe):
        raise NotExtensional("the extensionality inequality fails")
    pairs = [
        internal_pair(_source_as_bv(f, k, universe), vs[0], universe)
        for k, vs in f.pairs
    ]
    return ascent(pairs, universe)


def apply_internal(g, x, y, universe):
    """Truth value of "(x, y) belongs to the graph g"."""
    return eval_bv(
        pair_in_graph("g", "x", "y"), {"g": g, "x": x, "y": y}, universe
    )


def descend_function(g, dom, cod, fragment, universe, hf_source=None) -> ExtMap:
    """Descend an internal function graph to an ordinary map on the descent
    of its domain.

    Verifies the bounded functionality formula has truth value one first.  In
    modified mode (``hf_source`` a list of hereditarily finite sets) the
    resulting map is keyed by those sets, reading g at their standard names.
    """
    truth = eval_bv(
        function_between("g", "x", "y"), {"g": g, "x": dom, "y": cod}, universe
    )
    if not truth.is_one:
        raise NotAFunction(f"functionality truth value is {truth!r}, not one")
    if hf_source is not None:
        keys = list(hf_source)
        args = [universe.canonical_name(h) for h in keys]
    else:
        keys = args = descent(dom, fragment, universe)
    mapping = {}
    for key, arg in zip(keys, args):
        found = None
        for z in fragment:
            if apply_internal(g, arg, z, universe).is_one:
                found = z
                break
        if found is None:
            raise RankInsufficient(
                "no fragment member realizes the function value; raise the rank"
            )
        mapping[key] = found
    out = ExtMap.function(mapping)
    out = ExtMap(out.pairs, hf_source=hf_source is not None)
    return out


@dataclass
class TwoPointDescent:
    """The descended two-point algebra with its defining isomorphism.

    ``chi`` maps each algebra element b to the mixing of the internal one and
    zero by (b, not b); the elements list enumerates the descended carrier.
    Lattice operations are induced pointwise through the truth values
    [[d = one]], which determine the carrier members uniquely.
    """

    universe: Universe
    zero: BvSet
    one: BvSet
    two: BvSet
    chi: dict

    @property
    def elements(self):
        return list(self.chi.values())

    def value_of(self, d):
        """The algebra element [[d = one]]; inverse of chi on the carrier."""
        return self.universe.truth_eq(d, self.one)

    def _by_value(self, b):
        return self.chi[b]

    def meet(self, d1, d2):
        return self._by_value(self.value_of(d1) & self.value_of(d2))

    def join(self, d1, d2):
        return self._by_value(self.value_of(d1) | self.value_of(d2))

    def complement(self, d):
        return self._by_value(~self.value_of(d))


def descend_two_point(universe, rank_budget=None) -> TwoPointDescent:
    """Build the descent of the internal two-point algebra.

    The internal endpoints are the standard names of the atom-index codes of
    the algebra's zero and one, so [[zero != one]] = 1.  The code of one is
    the von Neumann numeral of the atom count, so the construction needs that
    much rank; a smaller explicit budget is refused.
    """
    alg = universe.alg
    needed = alg.atom_count
    if rank_budget is not None and rank_budget < needed:
        raise RankInsufficient(
            f"two-point codes need rank {needed}, budget is {rank_budget}"
        )
    zero = universe.element_name(alg.zero)
    one = universe.element_name(alg.one)
    two = ascent([zero, one], universe)
    chi = {}
    for b in alg.elements():
        chi[b] = universe.normalize(
            universe.mix(Partition(alg, [~b, b]), [zero, one])
        )
    return TwoPointDescent(universe, zero, one, two, chi)
