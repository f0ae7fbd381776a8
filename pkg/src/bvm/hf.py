"""Hereditarily finite sets with a deterministic total order.

These are the classical, two-valued sets: finite sets of finite sets all the
way down.  They serve as the target of the atom-fiber collapse and as the
source of standard names, so everything here is pure combinatorics.
"""

from __future__ import annotations

from functools import lru_cache


class HFSet:
    """A hereditarily finite set; immutable, hashable, totally ordered."""

    __slots__ = ("members", "rank", "_hash", "_key")

    def __init__(self, members=()):
        ms = frozenset(members)
        for m in ms:
            if not isinstance(m, HFSet):
                raise TypeError(f"HFSet members must be HFSets, got {m!r}")
        self.members = ms
        self.rank = 1 + max((m.rank for m in ms), default=-1)
        self._hash = hash(ms)
        self._key = None

    def __eq__(self, other):
        return isinstance(other, HFSet) and self.members == other.members

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return item in self.members

    def __iter__(self):
        return iter(sorted(self.members, key=HFSet.sort_key))

    def issubset(self, other):
        return self.members <= other.members

    def sort_key(self):
        """Total-order key: by rank, then size, then member keys."""
        if self._key is None:
            self._key = (
                self.rank,
                len(self.members),
                tuple(sorted(m.sort_key() for m in self.members)),
            )
        return self._key

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "{" + ",".join(repr(m) for m in self) + "}"


EMPTY = HFSet()


def hf(*members):
    return HFSet(members)


@lru_cache(maxsize=None)
def ordinal(n):
    """The von Neumann natural n: {0, 1, ..., n-1}."""
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return HFSet(ordinal(k) for k in range(n))


def is_ordinal(h):
    """True iff h is a von Neumann natural (transitive, totally epsilon-ordered)."""
    return h == ordinal(h.rank)


def from_int_set(indices):
    """The HF set {i^vN : i in indices}; injective coding of finite index sets."""
    return HFSet(ordinal(i) for i in indices)


def kpair(a, b):
    """Kuratowski pair {{a},{a,b}}."""
    return HFSet((HFSet((a,)), HFSet((a, b))))


def ktuple(xs):
    """Left-folded Kuratowski tuple: (x1,..,xn) = ((x1,..,x_{n-1}), xn)."""
    xs = list(xs)
    if not xs:
        raise ValueError("empty tuple has no HF coding here")
    acc = xs[0]
    for x in xs[1:]:
        acc = kpair(acc, x)
    return acc


def hf_function(mapping):
    """An HF function as its set of Kuratowski pairs."""
    return HFSet(kpair(a, b) for a, b in mapping.items())


def powerset(h):
    subsets = [EMPTY]
    for m in sorted(h.members, key=HFSet.sort_key):
        subsets += [HFSet(s.members | {m}) for s in subsets]
    return HFSet(subsets)


@lru_cache(maxsize=None)
def level_size(level):
    """Size of the classical cumulative level: |V_1| = 1, |V_{k+1}| = 2^|V_k|."""
    if level < 1:
        return 0
    if level == 1:
        return 1
    return 2 ** level_size(level - 1)


@lru_cache(maxsize=None)
def all_hf(level):
    """All HF sets in the cumulative level V_level, sorted; V_1 = (emptyset,)."""
    if level < 1:
        return ()
    if level == 1:
        return (EMPTY,)
    prev = all_hf(level - 1)
    out = [EMPTY]
    for m in prev:
        out += [HFSet(s.members | {m}) for s in out]
    return tuple(sorted(set(out), key=HFSet.sort_key))


def parse_hf(text):
    """Parse a literal like ``{{},{{}}}`` into an HFSet."""
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_set():
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != "{":
            raise ValueError(f"expected '{{' at position {pos} in {text!r}")
        pos += 1
        members = []
        skip_ws()
        if pos < len(text) and text[pos] == "}":
            pos += 1
            return HFSet(members)
        while True:
            members.append(parse_set())
            skip_ws()
            if pos >= len(text):
                raise ValueError(f"unterminated set in {text!r}")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == "}":
                pos += 1
                return HFSet(members)
            raise ValueError(f"expected ',' or '}}' at position {pos} in {text!r}")

    result = parse_set()
    skip_ws()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos} in {text!r}")
    return result
