"""Finite ordered sets with bottom: polars, bands, completion, forcing posets.

Disjointness of two elements means their only common lower bound is the
bottom.  The polar of a subset collects everything disjoint from all of it;
sets equal to their double polar are bands, and the inclusion-ordered band
family is a complete Boolean algebra, here materialized as an ordinary
powerset algebra over its atoms so the rest of the library can force over it.

Everything is bit-mask combinatorics; element i of a poset is bit i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .balg import BoolAlg
from .errors import BadSpec, InternalInconsistency, NotBoolean, SizeOverflow

POSET_CAP = 256        # hard cap on poset size
BAND_ENUM_CAP = 20     # band enumeration is 2^|P| worst case
DENSITY_ENUM_CAP = 14  # explicit density check enumerates all bands


class FinPoset:
    """A finite poset with least element; element 0 is always the bottom."""

    __slots__ = ("labels", "down", "_perp")

    def __init__(self, labels, leq_pairs):
        self.labels = tuple(labels)
        n = len(self.labels)
        if n == 0:
            raise BadSpec("a poset needs at least its bottom")
        if n > POSET_CAP:
            raise SizeOverflow(f"poset has {n} elements, cap is {POSET_CAP}")
        down = [1 << i for i in range(n)]
        for a, b in leq_pairs:
            down[b] |= 1 << a
        for i in range(1, n):
            down[i] |= 1
        changed = True
        while changed:
            changed = False
            for b in range(n):
                acc = down[b]
                probe = acc
                while probe:
                    a = (probe & -probe).bit_length() - 1
                    probe &= probe - 1
                    acc |= down[a]
                if acc != down[b]:
                    down[b] = acc
                    changed = True
        for a in range(n):
            for b in range(a + 1, n):
                if down[b] >> a & 1 and down[a] >> b & 1:
                    raise BadSpec(f"order is not antisymmetric at {a}, {b}")
        self.down = down
        self._perp = None

    @property
    def size(self):
        return len(self.labels)

    @property
    def bottom_mask(self):
        return 1

    def leq(self, i, j):
        return bool(self.down[j] >> i & 1)

    def disjoint(self, i, j):
        return self.down[i] & self.down[j] == 1

    def perp_masks(self):
        if self._perp is None:
            n = self.size
            self._perp = [0] * n
            for i in range(n):
                for j in range(n):
                    if self.disjoint(i, j):
                        self._perp[i] |= 1 << j
        return self._perp

    def elements(self):
        return range(self.size)

    def full_mask(self):
        return (1 << self.size) - 1

    def __repr__(self):
        return f"FinPoset({self.size} elements)"


def chain(k):
    """0 < c1 < ... < c_{k-1}; k counts all elements including bottom."""
    if k < 1:
        raise BadSpec("chain needs at least one element")
    labels = ["0"] + [f"c{i}" for i in range(1, k)]
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    return FinPoset(labels, pairs)


def antichain(k):
    """k incomparable elements above a bottom."""
    labels = ["0"] + [f"p{i}" for i in range(1, k + 1)]
    return FinPoset(labels, [])


def from_strict_pairs(labels, pairs):
    """Poset from strict covering/ordering pairs on labels; bottom adjoined
    as element 0 when the first label is not already "0"."""
    labels = list(labels)
    if not labels or labels[0] != "0":
        labels = ["0"] + labels
        pairs = [(a + 1, b + 1) for a, b in pairs]
    return FinPoset(labels, pairs)


@dataclass(frozen=True)
class Band:
    """A set equal to its double polar, as a member mask of its poset."""

    poset: FinPoset
    mask: int

    def members(self):
        return tuple(i for i in self.poset.elements() if self.mask >> i & 1)

    def labels(self):
        return tuple(self.poset.labels[i] for i in self.members())

    @property
    def is_zero_band(self):
        return self.mask == self.poset.bottom_mask

    def __le__(self, other):
        return self.mask & other.mask == self.mask


def polar_mask(P: FinPoset, mask) -> int:
    perp = P.perp_masks()
    out = P.full_mask()
    for i in P.elements():
        if mask >> i & 1:
            out &= perp[i]
    return out


def polar(P: FinPoset, subset) -> Band:
    """The set of elements disjoint from everything in the subset."""
    if isinstance(subset, Band):
        mask = subset.mask
    elif isinstance(subset, int):
        mask = subset
    else:
        mask = 0
        for i in subset:
            mask |= 1 << i
    return Band(P, polar_mask(P, mask))


def band_of(P: FinPoset, p) -> Band:
    """The principal band [p], the double polar of {p}."""
    return Band(P, polar_mask(P, polar_mask(P, 1 << p)))


def all_bands(P: FinPoset):
    """Every band, via closure of the single-element polars under meet
    (intersection); polars of arbitrary subsets are such intersections."""
    if P.size > BAND_ENUM_CAP:
        raise SizeOverflow(
            f"band enumeration capped at {BAND_ENUM_CAP} elements, poset has {P.size}"
        )
    perp = P.perp_masks()
    bands = {P.full_mask()}
    frontier = [P.full_mask()]
    while frontier:
        fresh = []
        for m in frontier:
            for i in P.elements():
                cut = m & perp[i]
                if cut not in bands:
                    bands.add(cut)
                    fresh.append(cut)
        frontier = fresh
    return sorted(bands)


@dataclass
class Completion:
    """The band algebra of a poset, packaged as a powerset algebra.

    ``algebra`` lives on the atoms of the band lattice; ``to_elem`` and
    ``from_elem`` translate between bands and algebra elements.
    """

    poset: FinPoset
    algebra: BoolAlg
    bands: list
    atom_masks: list
    _elem_of_band: dict

    def to_elem(self, band):
        return self.algebra.element(self._elem_of_band[band.mask])

    def from_elem(self, e):
        mask = 0
        for i in e.atom_indices():
            mask |= self.atom_masks[i]
        return Band(self.poset, polar_mask(self.poset, polar_mask(self.poset, mask)))

    def band_of(self, p):
        return band_of(self.poset, p)

    def to_dot(self):
        """Hasse diagram of the band lattice in DOT format."""
        masks = sorted(self._elem_of_band)
        lines = ["digraph bands {", "  rankdir=BT;"]
        names = {}
        for m in masks:
            label = ",".join(Band(self.poset, m).labels()) or "(empty)"
            names[m] = f"b{m}"
            lines.append(f'  b{m} [label="{{{label}}}"];')
        for low in masks:
            for high in masks:
                if low == high or low & high != low:
                    continue
                if any(
                    low & mid == low and mid & high == mid and mid not in (low, high)
                    for mid in masks
                ):
                    continue
                lines.append(f"  {names[low]} -> {names[high]};")
        lines.append("}")
        return "\n".join(lines)


def completion(P: FinPoset) -> Completion:
    """Build the Boolean completion: enumerate the bands, check the lattice
    is a powerset over its atoms, and hand back that powerset algebra.

    The Boolean check failing raises NotBoolean, which signals a bug: the
    band family of a poset with bottom is always a complete Boolean algebra.
    The one-element poset is refused up front; its single band would be an
    algebra with equal zero and unity, which is not a Boolean algebra here.
    """
    if P.size == 1:
        raise BadSpec("the trivial poset has a degenerate band lattice")
    masks = all_bands(P)
    zero_band = P.bottom_mask
    if zero_band not in masks or P.full_mask() not in masks:
        raise NotBoolean("band family misses its bounds")
    nonzero = [m for m in masks if m != zero_band]
    atoms = [
        m
        for m in nonzero
        if not any(o != m and o & m == o for o in nonzero)
    ]
    if len(masks) != 2 ** len(atoms):
        raise NotBoolean(
            f"{len(masks)} bands cannot form a powerset over {len(atoms)} atoms"
        )
    elem_of_band = {}
    for m in masks:
        bits = 0
        for i, a in enumerate(atoms):
            if a & m == a:
                bits |= 1 << i
        elem_of_band[m] = bits
    if len(set(elem_of_band.values())) != len(masks):
        raise NotBoolean("band-to-atom-set map is not injective")
    for m in masks:
        comp = polar_mask(P, m)
        if comp not in elem_of_band:
            raise NotBoolean("polar left the band family")
        if elem_of_band[comp] != elem_of_band[m] ^ ((1 << len(atoms)) - 1):
            raise NotBoolean("polar does not act as atom-set complement")
        if m & comp != zero_band:
            raise NotBoolean("band meets its polar above the bottom")
        joined = polar_mask(P, polar_mask(P, m | comp))
        if joined != P.full_mask():
            raise NotBoolean("band joined with its polar misses the top")
    alg = BoolAlg(len(atoms), name=f"B(bands:{P.size})")
    return Completion(P, alg, [Band(P, m) for m in masks], atoms, elem_of_band)


@dataclass
class RefinedReport:
    """The four equivalent refinedness conditions, evaluated separately."""

    separation: bool        # (a)
    principal_intervals: bool  # (b) [p] = [0, p]
    injective: bool         # (c)
    dense_embedding: bool   # (d)

    @property
    def answer(self):
        return self.separation

    def to_json(self):
        return {
            "separation": self.separation,
            "principal_intervals": self.principal_intervals,
            "injective": self.injective,
            "dense_embedding": self.dense_embedding,
            "refined": self.answer,
        }


def is_refined(P: FinPoset):
    """Evaluate the four refinedness conditions and check they agree.

    (a) whenever q is nonzero and not below p there is a nonzero part of q
    disjoint from p; (b) every principal band is the initial segment of its
    generator; (c) the principal-band map determines the order: it is
    injective and order-reflecting; (d) it is an order embedding onto a
    dense subfamily of the bands.  Disagreement raises, since the four are
    provably equivalent.

    Bare injectivity in (c) would be strictly weaker: on the six-element
    poset with p1,p2,p3 < p4 and p2,p3 < p5 the principal bands are pairwise
    distinct although (a) fails at the pair (p4, p5).  Order reflection is
    the reading that keeps the equivalence a theorem.
    """
    n = P.size
    principal = [band_of(P, p).mask for p in range(n)]
    sep = True
    for q in range(1, n):
        for p in range(n):
            if P.leq(q, p):
                continue
            if not any(
                r != 0 and P.leq(r, q) and P.disjoint(r, p)
                for r in range(1, n)
            ):
                sep = False
    intervals = all(principal[p] == P.down[p] for p in range(n))
    injective = len(set(principal)) == n and all(
        P.leq(p, q)
        for p in range(n)
        for q in range(n)
        if principal[p] & principal[q] == principal[p]
    )
    embedding = all(
        P.leq(p, q) == (principal[p] & principal[q] == principal[p])
        for p in range(n)
        for q in range(n)
    )
    # Density of the principal-band image is automatic: a nonzero band K has
    # a nonzero member p, and [p] = {p}^pp is contained in K^pp = K.  The
    # explicit enumeration below re-verifies that on small posets.
    dense = True
    if n <= DENSITY_ENUM_CAP:
        for mask in all_bands(P):
            if mask == P.bottom_mask:
                continue
            if not any(
                principal[p] & mask == principal[p]
                for p in range(1, n)
                if mask >> p & 1
            ):
                dense = False
    report = RefinedReport(sep, intervals, injective, embedding and dense)
    values = {
        report.separation,
        report.principal_intervals,
        report.injective,
        report.dense_embedding,
    }
    if len(values) != 1:
        raise InternalInconsistency(
            f"refinedness conditions disagree: {report.to_json()!r}"
        )
    return report.answer, report


def forcing_c(x_size, y_size, kappa=None, cap=2048) -> FinPoset:
    """The forcing poset of partial functions from an x_size-set to a
    y_size-set, reverse-inclusion ordered, bottom adjoined.

    ``kappa`` bounds the domain size strictly; None means no bound, which at
    finite scale coincides with any kappa exceeding x_size.
    """
    if x_size < 1 or y_size < 1:
        raise BadSpec("forcing poset needs nonempty argument sets")
    limit = x_size + 1 if kappa is None else min(kappa, x_size + 1)
    functions = []
    for k in range(limit):
        for dom in itertools.combinations(range(x_size), k):
            for values in itertools.product(range(y_size), repeat=k):
                functions.append(tuple(zip(dom, values)))
    if len(functions) + 1 > cap:
        raise SizeOverflow(
            f"forcing poset would have {len(functions) + 1} elements, cap {cap}"
        )
    labels = ["0"] + [function_label(f) for f in functions]
    pairs = []
    for i, f in enumerate(functions, start=1):
        fset = set(f)
        for j, g in enumerate(functions, start=1):
            if fset <= set(g):  # g extends f, so g <= f in forcing order
                pairs.append((j, i))
    return FinPoset(labels, pairs)


def function_label(pairs):
    if not pairs:
        return "e"
    return "f[" + ",".join(f"{a}:{v}" for a, v in sorted(pairs)) + "]"


def forcing_index(P: FinPoset, mapping) -> int:
    """Locate a partial function in a forcing poset by its graph."""
    label = function_label(tuple(mapping.items()))
    return P.labels.index(label)


def forcing_count(x_size, y_size):
    """Closed form for |C(x, y)|: sum over k of C(x_size, k) * y_size^k."""
    total = 0
    for k in range(x_size + 1):
        total += _binom(x_size, k) * y_size ** k
    return total


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
