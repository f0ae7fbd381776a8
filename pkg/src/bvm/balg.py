"""Finite complete Boolean algebras, represented as powersets of named atoms.

Every finite complete Boolean algebra is isomorphic to the powerset of its
atoms, so this representation is complete for the finite case.  Elements are
bit masks over the atom list; two algebras never share elements, even when
they have the same number of atoms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AlgebraMismatch, BadSpec, NotAutomorphism

_algebra_ids = itertools.count()


class BoolAlg:
    """A finite complete Boolean algebra on ``atom_count`` named atoms."""

    __slots__ = ("atom_count", "algebra_id", "name", "atom_names", "_full", "_index")

    def __init__(self, atom_count, name=None, atom_names=None):
        if atom_count < 1:
            raise BadSpec("an algebra needs at least one atom")
        if atom_names is None:
            atom_names = tuple(f"a{i + 1}" for i in range(atom_count))
        else:
            atom_names = tuple(atom_names)
            if len(atom_names) != atom_count or len(set(atom_names)) != atom_count:
                raise BadSpec("atom names must be distinct and match atom_count")
        self.atom_count = atom_count
        self.algebra_id = next(_algebra_ids)
        self.name = name or f"B{2 ** atom_count}"
        self.atom_names = atom_names
        self._full = (1 << atom_count) - 1
        self._index = {a: i for i, a in enumerate(atom_names)}

    @property
    def zero(self):
        return Elem(self, 0)

    @property
    def one(self):
        return Elem(self, self._full)

    def atom(self, ref):
        """Atom as an element; ``ref`` is an index or an atom name."""
        return Elem(self, 1 << self.atom_index(ref))

    def atom_index(self, ref):
        if isinstance(ref, str):
            if ref not in self._index:
                raise BadSpec(f"unknown atom {ref!r} in {self.name}")
            return self._index[ref]
        if not 0 <= ref < self.atom_count:
            raise BadSpec(f"atom index {ref} out of range for {self.name}")
        return ref

    def element(self, mask):
        if not 0 <= mask <= self._full:
            raise BadSpec(f"mask {mask} out of range for {self.name}")
        return Elem(self, mask)

    def from_atoms(self, refs):
        mask = 0
        for ref in refs:
            mask |= 1 << self.atom_index(ref)
        return Elem(self, mask)

    def atoms(self):
        return [Elem(self, 1 << i) for i in range(self.atom_count)]

    def elements(self):
        """All 2^n elements, in mask order."""
        return [Elem(self, m) for m in range(self._full + 1)]

    def parse_element(self, text):
        """Parse a textual element literal: ``0``, ``1``, ``{}``, ``{a1,a3}``."""
        text = text.strip()
        if text == "0":
            return self.zero
        if text == "1":
            return self.one
        if text.startswith("{") and text.endswith("}"):
            body = text[1:-1].strip()
            names = [p.strip() for p in body.split(",")] if body else []
            return self.from_atoms(names)
        raise BadSpec(f"bad element literal {text!r}")

    def __repr__(self):
        return f"BoolAlg({self.name}, atoms={self.atom_count})"


@dataclass(frozen=True)
class Elem:
    """An element of a finite Boolean algebra, as a bit mask over its atoms."""

    alg: BoolAlg
    mask: int

    def _check(self, other):
        if not isinstance(other, Elem):
            raise TypeError(f"expected Elem, got {other!r}")
        if other.alg is not self.alg:
            raise AlgebraMismatch(
                f"elements of {self.alg.name}#{self.alg.algebra_id} and "
                f"{other.alg.name}#{other.alg.algebra_id} cannot be combined"
            )

    def meet(self, other):
        self._check(other)
        return Elem(self.alg, self.mask & other.mask)

    def join(self, other):
        self._check(other)
        return Elem(self.alg, self.mask | other.mask)

    def complement(self):
        return Elem(self.alg, self.mask ^ self.alg._full)

    def imp(self, other):
        """Boolean implication, defined as (not self) or other."""
        self._check(other)
        return Elem(self.alg, (self.mask ^ self.alg._full) | other.mask)

    def leq(self, other):
        self._check(other)
        return self.mask & other.mask == self.mask

    def symm_diff(self, other):
        self._check(other)
        return Elem(self.alg, self.mask ^ other.mask)

    __and__ = meet
    __or__ = join
    __invert__ = complement
    __xor__ = symm_diff
    __le__ = leq

    def __ge__(self, other):
        self._check(other)
        return other.leq(self)

    @property
    def is_zero(self):
        return self.mask == 0

    @property
    def is_one(self):
        return self.mask == self.alg._full

    def atoms(self):
        """Names of the atoms below this element, in atom order."""
        return tuple(
            name for i, name in enumerate(self.alg.atom_names) if self.mask >> i & 1
        )

    def atom_indices(self):
        return tuple(i for i in range(self.alg.atom_count) if self.mask >> i & 1)

    def to_json(self):
        return list(self.atoms())

    def __repr__(self):
        if self.is_zero:
            return "0"
        if self.is_one:
            return "1"
        return "{" + ",".join(self.atoms()) + "}"


def aggregate(alg, xs, kind):
    """Big meet or join of a finite sequence; empty meet is 1, empty join is 0."""
    if kind not in ("meet", "join"):
        raise BadSpec(f"aggregate kind must be 'meet' or 'join', got {kind!r}")
    acc = alg._full if kind == "meet" else 0
    for x in xs:
        if x.alg is not alg:
            raise AlgebraMismatch("aggregate over mixed algebras")
        acc = acc & x.mask if kind == "meet" else acc | x.mask
    return Elem(alg, acc)


def big_meet(alg, xs):
    return aggregate(alg, xs, "meet")


def big_join(alg, xs):
    return aggregate(alg, xs, "join")


def is_partition(alg, xs):
    """True iff the blocks are pairwise disjoint and join to 1.

    Zero blocks are permitted; an empty sequence is not a partition (its join
    is 0, never 1).
    """
    total = 0
    for x in xs:
        if x.alg is not alg:
            raise AlgebraMismatch("partition blocks from mixed algebras")
        if total & x.mask:
            return False
        total |= x.mask
    return total == alg._full


class Partition:
    """A partition of unity: pairwise-disjoint blocks joining to 1."""

    __slots__ = ("alg", "blocks")

    def __init__(self, alg, blocks):
        blocks = tuple(blocks)
        if not is_partition(alg, blocks):
            raise BadSpec("blocks do not form a partition of unity")
        self.alg = alg
        self.blocks = blocks

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self):
        return f"Partition({list(self.blocks)!r})"


class Hom:
    """A complete homomorphism between finite algebras.

    Stored via atom pullbacks: target atom q lies under the image of b iff
    b >= pullback(q).  On finite algebras every homomorphism determined this
    way by atom pullbacks is complete.
    """

    __slots__ = ("source", "target", "pullbacks", "is_automorphism")

    def __init__(self, source, target, pullbacks, is_automorphism=False):
        self.source = source
        self.target = target
        self.pullbacks = tuple(pullbacks)
        self.is_automorphism = is_automorphism

    def __call__(self, b):
        if b.alg is not self.source:
            raise AlgebraMismatch("argument is not from the source algebra")
        mask = 0
        for q, pull in enumerate(self.pullbacks):
            if pull.mask & b.mask == pull.mask:
                mask |= 1 << q
        return Elem(self.target, mask)

    def inverse(self):
        if not self.is_automorphism:
            raise NotAutomorphism("only automorphisms are inverted here")
        inv = [None] * self.source.atom_count
        for q, pull in enumerate(self.pullbacks):
            (i,) = pull.atom_indices()
            inv[i] = self.target.atom(q)
        return Hom(self.target, self.source, inv, is_automorphism=True)

    def __repr__(self):
        kind = "automorphism" if self.is_automorphism else "hom"
        return f"Hom({kind}, {self.source.name}->{self.target.name})"


def make_hom(source, target, spec):
    """Build a homomorphism from a simple spec.

    ``spec`` is ``("permutation", seq)`` sending source atom i to target atom
    seq[i], or ``("projection", atom)`` onto a one-atom algebra (the factor
    map at the principal ultrafilter of that atom).  For projections,
    ``target`` may be None to create a fresh two-element algebra.
    """
    if not isinstance(spec, tuple) or len(spec) != 2:
        raise BadSpec("spec must be ('permutation', seq) or ('projection', atom)")
    kind, data = spec
    if kind == "permutation":
        if target is None:
            target = source
        if target.atom_count != source.atom_count:
            raise BadSpec("permutation needs equal atom counts")
        perm = [target.atom_index(r) for r in data]
        if sorted(perm) != list(range(source.atom_count)):
            raise BadSpec("permutation is not a bijection on atoms")
        pullbacks = [None] * source.atom_count
        for i, q in enumerate(perm):
            pullbacks[q] = source.atom(i)
        return Hom(source, target, pullbacks, is_automorphism=target is source)
    if kind == "projection":
        i = source.atom_index(data)
        if target is None:
            target = BoolAlg(1, name="2")
        if target.atom_count != 1:
            raise BadSpec("projection target must have exactly one atom")
        return Hom(source, target, [source.atom(i)])
    raise BadSpec(f"unknown hom spec kind {kind!r}")


def identity_hom(alg):
    return make_hom(alg, alg, ("permutation", range(alg.atom_count)))
