"""Bounded-rank Boolean-valued sets over a finite algebra.

A ``BvSet`` is a finite map from previously built BvSets to algebra elements;
the truth values of membership and equality are computed by the mutual
recursion

    [[x in y]] = join over z in dom(y) of  y(z) /\\ [[z = x]]
    [[x = y]]  = (meet over z in dom(x) of x(z) -> [[z in y]])
              /\\ (meet over z in dom(y) of y(z) -> [[z in x]])

All sets are interned per universe, so identical entry tables share one
object and the truth caches are keyed by ids.  Everything is immutable after
construction; caches are write-once, so concurrent duplicate computation is
harmless.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hf import HFSet, all_hf, from_int_set, level_size, ordinal
from .balg import BoolAlg, Elem, Partition, big_join
from .errors import (
    AlgebraMismatch,
    CapExceeded,
    LengthMismatch,
    NotAutomorphism,
    SearchExhausted,
)

DEFAULT_CAP = 200_000


class BvSet:
    """One Boolean-valued set: entries map child BvSets to algebra elements.

    ``rank`` is 0 for the empty function and 1 + max child rank otherwise.
    Instances are interned by their owning Universe; compare with ``is``.
    """

    __slots__ = ("uid", "alg", "entries", "rank")

    def __init__(self, uid, alg, entries):
        self.uid = uid
        self.alg = alg
        self.entries = entries
        self.rank = 1 + max((c.rank for c, _ in entries), default=-1)

    @property
    def children(self):
        return tuple(c for c, _ in self.entries)

    def value_of(self, child):
        for c, v in self.entries:
            if c is child:
                return v
        return self.alg.zero

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"<bv:{self.uid} rank={self.rank} size={len(self.entries)}>"


@dataclass
class OrdinalDecomposition:
    """A partition of unity plus the standard ordinals it glues together."""

    partition: Partition
    ordinals: tuple


class Universe:
    """Workspace for one algebra: interning, truth values, names, enumeration."""

    def __init__(self, alg: BoolAlg, cap: int = DEFAULT_CAP):
        self.alg = alg
        self.cap = cap
        self._sets = []
        self._intern = {}
        self._subset = {}
        self._eq = {}
        self._mem = {}
        self._normal = {}
        self._names = {}
        self._collapse = {}
        self._reps = {}
        self._rep_fibers = {}
        self._levels = {}
        self._eval_cache = {}
        self._empty = self.make({})

    # ------------------------------------------------------------------
    # construction

    def make(self, entries) -> BvSet:
        """Intern the BvSet with the given child -> value entries.

        Zero values are kept verbatim; ``normalize`` is the operation that
        drops them.
        """
        items = list(entries.items()) if isinstance(entries, dict) else list(entries)
        for child, value in items:
            self._owned(child)
            if value.alg is not self.alg:
                raise AlgebraMismatch("entry value from a foreign algebra")
        if len({c.uid for c, _ in items}) != len(items):
            raise ValueError("duplicate children in entries")
        items.sort(key=lambda cv: cv[0].uid)
        key = tuple((c.uid, v.mask) for c, v in items)
        found = self._intern.get(key)
        if found is not None:
            return found
        x = BvSet(len(self._sets), self.alg, tuple(items))
        self._sets.append(x)
        self._intern[key] = x
        return x

    @property
    def empty(self) -> BvSet:
        return self._empty

    def _owned(self, x):
        if (
            not isinstance(x, BvSet)
            or x.uid >= len(self._sets)
            or self._sets[x.uid] is not x
        ):
            raise AlgebraMismatch("BvSet belongs to a different universe")
        return x

    # ------------------------------------------------------------------
    # truth values

    def truth_subset(self, x, y) -> Elem:
        """[[x is a subset of y]] relative to x's entries."""
        key = (x.uid, y.uid)
        cached = self._subset.get(key)
        if cached is not None:
            return cached
        acc = self.alg.one
        for z, v in x.entries:
            acc = acc & v.imp(self.truth_mem(z, y))
            if acc.is_zero:
                break
        self._subset[key] = acc
        return acc

    def truth_mem(self, x, y) -> Elem:
        """The truth value [[x in y]]."""
        self._owned(x), self._owned(y)
        key = (x.uid, y.uid)
        cached = self._mem.get(key)
        if cached is not None:
            return cached
        acc = self.alg.zero
        for z, v in y.entries:
            if not v.is_zero:
                acc = acc | (v & self.truth_eq(z, x))
                if acc.is_one:
                    break
        self._mem[key] = acc
        return acc

    def truth_eq(self, x, y) -> Elem:
        """The truth value [[x = y]]."""
        self._owned(x), self._owned(y)
        if x is y:
            return self.alg.one
        key = (x.uid, y.uid) if x.uid < y.uid else (y.uid, x.uid)
        cached = self._eq.get(key)
        if cached is not None:
            return cached
        val = self.truth_subset(x, y) & self.truth_subset(y, x)
        self._eq[key] = val
        return val

    # ------------------------------------------------------------------
    # separation

    def normalize(self, x) -> BvSet:
        """Structural normal form: children normalized, zero entries dropped,
        children with equality truth value one merged with joined coefficients,
        entries in canonical order.  Truth-equal to the input; idempotent."""
        cached = self._normal.get(x.uid)
        if cached is not None:
            return cached
        joined = {}
        for z, v in x.entries:
            if v.is_zero:
                continue
            nz = self.normalize(z)
            joined[nz] = joined.get(nz, self.alg.zero) | v
        groups = []  # (representative, accumulated value)
        for child in sorted(joined, key=lambda c: c.uid):
            for i, (rep, acc) in enumerate(groups):
                if self.truth_eq(rep, child).is_one:
                    groups[i] = (rep, acc | joined[child])
                    break
            else:
                groups.append((child, joined[child]))
        result = self.make({rep: v for rep, v in groups if not v.is_zero})
        self._normal[x.uid] = result
        self._normal[result.uid] = result
        return result

    # ------------------------------------------------------------------
    # scaling and mixing

    def scale(self, b, x) -> BvSet:
        """The function with the same domain and values b /\\ x(t)."""
        if b.alg is not self.alg:
            raise AlgebraMismatch("scalar from a foreign algebra")
        self._owned(x)
        return self.make({z: b & v for z, v in x.entries})

    def mix(self, parts, xs) -> BvSet:
        """Mixing of xs by a partition of unity: t -> join of b_i /\\ x_i(t)
        over the union of the domains."""
        if not isinstance(parts, Partition):
            parts = Partition(self.alg, parts)
        xs = [self._owned(x) for x in xs]
        if len(parts) != len(xs):
            raise LengthMismatch(f"{len(parts)} blocks vs {len(xs)} sets")
        values = {}
        for b, x in zip(parts, xs):
            for z, v in x.entries:
                values[z] = values.get(z, self.alg.zero) | (b & v)
        return self.make(values)

    # ------------------------------------------------------------------
    # standard names and collapse

    def canonical_name(self, h) -> BvSet:
        """The standard name of a hereditarily finite set: every member's
        name, with value one."""
        cached = self._names.get(h)
        if cached is not None:
            return cached
        x = self.make({self.canonical_name(m): self.alg.one for m in h.members})
        self._names[h] = x
        return x

    def hf_code(self, b) -> HFSet:
        """Injective HF coding of an algebra element: the set of its atom
        indices as von Neumann naturals."""
        if b.alg is not self.alg:
            raise AlgebraMismatch("element from a foreign algebra")
        return from_int_set(b.atom_indices())

    def element_name(self, b) -> BvSet:
        return self.canonical_name(self.hf_code(b))

    def psi_rho(self, rho) -> BvSet:
        """The set with one entry per algebra element b: (name of b, rho(b))."""
        if not getattr(rho, "is_automorphism", False) or rho.source is not self.alg:
            raise NotAutomorphism("psi requires an automorphism of this algebra")
        return self.make({self.element_name(b): rho(b) for b in self.alg.elements()})

    def collapse_at_atom(self, q, x) -> HFSet:
        """Classical fiber of x at an atom: membership iff the entry value
        contains the atom."""
        qi = self.alg.atom_index(q)
        self._owned(x)
        key = (qi, x.uid)
        cached = self._collapse.get(key)
        if cached is not None:
            return cached
        members = {
            self.collapse_at_atom(qi, z) for z, v in x.entries if v.mask >> qi & 1
        }
        h = HFSet(members)
        self._collapse[key] = h
        return h

    def fibers(self, x):
        return tuple(
            self.collapse_at_atom(q, x) for q in range(self.alg.atom_count)
        )

    # ------------------------------------------------------------------
    # the separated fragment

    def _rep(self, fib) -> BvSet:
        """Canonical representative of the truth-equality class whose atom
        fibers are the given HF tuple; deterministic and of least rank."""
        found = self._reps.get(fib)
        if found is not None:
            return found
        level = max(h.rank for h in fib) + 1
        if level == 1:
            rep = self.empty
        else:
            entries = {}
            for t in self._reps_up_to(level - 1):
                tf = self._rep_fibers[t.uid]
                mask = 0
                for q in range(self.alg.atom_count):
                    if tf[q] in fib[q]:
                        mask |= 1 << q
                if mask:
                    entries[t] = self.alg.element(mask)
            rep = self.make(entries)
        self._reps[fib] = rep
        self._rep_fibers[rep.uid] = fib
        return rep

    def _reps_up_to(self, level):
        cached = self._levels.get(level)
        if cached is not None:
            return cached
        n = self.alg.atom_count
        count = level_size(level) ** n
        if count > self.cap:
            raise CapExceeded(
                f"fragment would have {count} elements (cap {self.cap})", count
            )
        tuples = sorted(
            itertools.product(all_hf(level), repeat=n),
            key=lambda t: tuple(h.sort_key() for h in t),
        )
        reps = tuple(self._rep(t) for t in tuples)
        self._levels[level] = reps
        return reps

    def enumerate_universe(self, rank_bound, cap=None):
        """All separated elements up to the given cumulative level, in a
        deterministic order, pairwise non-equal, closed under mixing.

        ``rank_bound`` counts cumulative-hierarchy levels: bound 2 over the
        four-element algebra yields the four sets with domain contained in
        {empty}.  Bounds below 1 are clamped to 1, which yields the empty set
        alone.
        """
        level = max(rank_bound, 1)
        count = level_size(level) ** self.alg.atom_count
        if count > (cap if cap is not None else self.cap):
            raise CapExceeded(
                f"fragment would have {count} elements", count
            )
        return list(self._reps_up_to(level))

    def canonicalize(self, x) -> BvSet:
        """Exhaustive canonicalization: the fragment representative of x's
        truth-equality class.  Two sets are truth-equal iff this yields the
        same object."""
        return self._rep(self.fibers(self._owned(x)))

    # ------------------------------------------------------------------
    # internal ordinals

    def ordinal_truth(self, x) -> Elem:
        """Truth value of the bounded ordinal formula: transitivity plus
        total ordering of the domain by membership."""
        self._owned(x)
        tr = self.alg.one
        for y, vy in x.entries:
            inner = self.alg.one
            for t, vt in y.entries:
                inner = inner & vt.imp(self.truth_mem(t, x))
            tr = tr & vy.imp(inner)
        tot = self.alg.one
        for u, vu in x.entries:
            for v, vv in x.entries:
                trichotomy = (
                    self.truth_mem(u, v)
                    | self.truth_eq(u, v)
                    | self.truth_mem(v, u)
                )
                tot = tot & (vu & vv).imp(trichotomy)
        return tr & tot

    def ordinal_ops(self, x, rank_bound) -> tuple:
        """(truth of the ordinal formula, optional mixing decomposition).

        When the truth value is one, searches the standard ordinals up to the
        rank bound for a partition (b_a) with x truth-equal to the mixing of
        the a-names; by the decomposition theorem the search must succeed, so
        exhaustion signals a bug.
        """
        truth = self.ordinal_truth(x)
        if not truth.is_one:
            return truth, None
        blocks, ordinals = [], []
        for a in range(rank_bound + 1):
            b = self.truth_eq(x, self.canonical_name(ordinal(a)))
            if not b.is_zero:
                blocks.append(b)
                ordinals.append(ordinal(a))
        if not big_join(self.alg, blocks).is_one:
            raise SearchExhausted(
                f"no ordinal decomposition within rank bound {rank_bound}"
            )
        return truth, OrdinalDecomposition(
            Partition(self.alg, blocks), tuple(ordinals)
        )

    # ------------------------------------------------------------------
    # serialization

    def to_json(self, x):
        """Nested dump: the set's id plus a table of every reachable set."""
        table = {}

        def visit(s):
            if s.uid in table:
                return
            table[s.uid] = {c.uid: v.to_json() for c, v in s.entries}
            for c, _ in s.entries:
                visit(c)

        visit(self._owned(x))
        return {
            "id": x.uid,
            "algebra": self.alg.name,
            "table": {str(uid): entries for uid, entries in sorted(table.items())},
        }


def pi_star(pi, x, target: Universe) -> BvSet:
    """Transport along a homomorphism: domain maps pointwise, values are the
    joins of pi-images over children with a common image."""
    if pi.source is not x.alg:
        raise AlgebraMismatch("hom source differs from the set's algebra")
    if pi.target is not target.alg:
        raise AlgebraMismatch("hom target differs from the target universe")
    memo = {}

    def go(s):
        found = memo.get(s.uid)
        if found is not None:
            return found
        grouped = {}
        for z, v in s.entries:
            iz = go(z)
            grouped[iz] = grouped.get(iz, target.alg.zero) | pi(v)
        out = target.make(grouped)
        memo[s.uid] = out
        return out

    return go(x)


def two_valued_to_hf(universe: Universe, x) -> HFSet:
    """Read a set over a one-atom algebra as the hereditarily finite set it
    denotes (membership iff value one)."""
    if universe.alg.atom_count != 1:
        raise AlgebraMismatch("only sets over a one-atom algebra collapse directly")
    return universe.collapse_at_atom(0, x)
