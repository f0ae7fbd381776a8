"""Named verification suites covering the library's contract.

Each suite runs a batch of randomized or exhaustive checks and returns a
``SuiteResult`` with one line per check group.  The same functions back the
acceptance test module and the command-line ``suite`` verb; counts default to
the contract sizes, and every expectation is exact (no numeric tolerances —
the domain is finite Boolean algebra).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import arrows, bsets, posets
from .balg import BoolAlg, Partition, big_join, make_hom
from .errors import InternalInconsistency, NotBoolean
from .evaluator import (
    check_los,
    check_restricted_transfer,
    eval_bv,
    find_max_witness,
)
from .formula import (
    And,
    App,
    BoundedExists,
    BoundedForall,
    CarrierExists,
    CarrierForall,
    Const,
    Eq,
    Imp,
    Mem,
    Not,
    Or,
    Pred,
    Signature,
    Var,
    is_ultrafilter,
    parse,
)
from .hf import HFSet, all_hf
from .universe import Universe


@dataclass
class CheckLine:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    def add(self, label, ok, detail=""):
        self.checks.append(CheckLine(label, bool(ok), detail))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def lines(self):
        out = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            detail = f"  ({c.detail})" if c.detail else ""
            out.append(f"[{status}] {self.name}: {c.label}{detail}")
        return out

    def to_json(self):
        return {
            "suite": self.name,
            "ok": self.ok,
            "checks": [
                {"label": c.label, "ok": c.ok, "detail": c.detail}
                for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# shared generators

_universes = {}


def universe_for(atoms) -> Universe:
    if atoms not in _universes:
        _universes[atoms] = Universe(BoolAlg(atoms))
    return _universes[atoms]


def fragment_for(atoms, rank):
    return universe_for(atoms).enumerate_universe(rank)


def random_restricted_formula(rng, scope, depth):
    """A random formula whose quantifiers are all bounded by in-scope terms."""
    counter = itertools.count()

    def go(scope, depth):
        if depth <= 0 or rng.random() < 0.25:
            l, r = rng.choice(scope), rng.choice(scope)
            return rng.choice([Mem, Eq])(Var(l), Var(r))
        kind = rng.choice(["not", "and", "or", "imp", "forall", "exists"])
        if kind == "not":
            return Not(go(scope, depth - 1))
        if kind in ("and", "or", "imp"):
            node = {"and": And, "or": Or, "imp": Imp}[kind]
            return node(go(scope, depth - 1), go(scope, depth - 1))
        v = f"u{next(counter)}"
        bound = Var(rng.choice(scope))
        body = go(scope + [v], depth - 1)
        return (BoundedForall if kind == "forall" else BoundedExists)(v, bound, body)

    return go(list(scope), depth)


def random_hf(rng, max_level=4) -> HFSet:
    return rng.choice(all_hf(max_level))


def random_fiberwise_map(rng, universe, rank):
    """A random extensional self-map of the fragment, built from one
    classical function per atom acting on the fibers."""
    pool = all_hf(max(rank, 1))
    tables = [
        {h: rng.choice(pool) for h in pool}
        for _ in range(universe.alg.atom_count)
    ]

    def apply(x):
        fib = universe.fibers(x)
        return universe._rep(tuple(tables[q][h] for q, h in enumerate(fib)))

    return apply


def random_partition(rng, alg) -> Partition:
    """A random partition of unity with a random number of blocks."""
    k = rng.randint(1, alg.atom_count + 1)
    masks = [0] * k
    for q in range(alg.atom_count):
        masks[rng.randrange(k)] |= 1 << q
    return Partition(alg, [alg.element(m) for m in masks])


def random_bset(rng, alg, carrier_size) -> bsets.BSet:
    """A random valid Boolean metric: label each element per atom, distances
    collect the atoms where the labels differ.  Distinct elements get
    distinct label vectors, so the identity axiom holds."""
    while True:
        vectors = [
            tuple(rng.randrange(carrier_size) for _ in range(alg.atom_count))
            for _ in range(carrier_size)
        ]
        if len(set(vectors)) == carrier_size:
            break
    carrier = [f"x{i}" for i in range(carrier_size)]
    metric = {}
    for i in range(carrier_size):
        for j in range(carrier_size):
            mask = 0
            for q in range(alg.atom_count):
                if vectors[i][q] != vectors[j][q]:
                    mask |= 1 << q
            metric[(i, j)] = alg.element(mask)
    return bsets.BSet(alg, carrier, metric)


def random_poset(rng, max_size=10) -> posets.FinPoset:
    """A random poset with bottom: a random DAG on the non-bottom part."""
    n = rng.randint(1, max_size - 1)
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < 0.3:
                pairs.append((i, j))
    labels = ["0"] + [f"p{i}" for i in range(1, n + 1)]
    return posets.FinPoset(labels, pairs)


def posets_with_bottom_upto(max_size):
    """All posets with bottom on at most max_size elements, up to
    isomorphism: every poset on the non-bottom part, bottom adjoined."""
    out = [posets.FinPoset(["0"], [])]
    for k in range(1, max_size):
        seen = set()
        strict_pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
        for bits in range(1 << len(strict_pairs)):
            rel = {strict_pairs[t] for t in range(len(strict_pairs)) if bits >> t & 1}
            if not _is_strict_order(rel, k):
                continue
            canon = _canonical_relation(rel, k)
            if canon in seen:
                continue
            seen.add(canon)
            labels = ["0"] + [f"p{i}" for i in range(k)]
            out.append(
                posets.FinPoset(labels, [(a + 1, b + 1) for a, b in rel])
            )
    return out


def _is_strict_order(rel, k):
    for a, b in rel:
        if (b, a) in rel:
            return False
        for c, d in rel:
            if b == c and (a, d) not in rel:
                return False
    return True


def _canonical_relation(rel, k):
    best = None
    for perm in itertools.permutations(range(k)):
        image = tuple(sorted((perm[a], perm[b]) for a, b in rel))
        if best is None or image < best:
            best = image
    return best


# ---------------------------------------------------------------------------
# suites

def suite_los(seed=0, cases=500) -> SuiteResult:
    """Fiber soundness: the truth value of every restricted formula equals
    the join of the atoms whose classical collapse satisfies it."""
    rng = random.Random(seed)
    result = SuiteResult("los")
    failures = 0
    for i in range(cases):
        atoms = rng.randint(1, 3)
        universe = universe_for(atoms)
        fragment = fragment_for(atoms, 3)
        f = random_restricted_formula(rng, ["x", "y", "z"], rng.randint(1, 4))
        assignment = {v: rng.choice(fragment) for v in ("x", "y", "z")}
        if not check_los(f, assignment, universe).holds:
            failures += 1
    result.add(
        f"{cases} randomized truth-vs-fibers comparisons",
        failures == 0,
        f"{failures} failures",
    )
    return result


def suite_transfer(seed=0, cases=200) -> SuiteResult:
    """Restricted formulas hold classically iff their standard-name
    translation has truth value one."""
    rng = random.Random(seed)
    result = SuiteResult("transfer")
    failures = 0
    for i in range(cases):
        atoms = rng.randint(1, 3)
        universe = universe_for(atoms)
        f = random_restricted_formula(rng, ["x", "y", "z"], rng.randint(1, 4))
        assignment = {v: random_hf(rng) for v in ("x", "y", "z")}
        if not check_restricted_transfer(f, assignment, universe).holds:
            failures += 1
    result.add(
        f"{cases} randomized classical-vs-named comparisons",
        failures == 0,
        f"{failures} failures",
    )
    return result


_LAW6_CORPUS = [
    "v in w",
    "w in v",
    "v = w",
    "~(v in v)",
    "forall u in v . u in w",
    "exists u in w . u = v",
    "forall u in v . exists t in w . u in t \\/ u = t",
    "v in w -> exists u in w . u = v",
]


def _laws_on(universe, xs, scalars, rng, result, tag, sample=None):
    alg = universe.alg
    pairs = list(itertools.product(xs, repeat=2))
    triples = list(itertools.product(xs, repeat=3))
    if sample is not None:
        pairs = [tuple(rng.choice(xs) for _ in range(2)) for _ in range(sample)]
        triples = [tuple(rng.choice(xs) for _ in range(3)) for _ in range(sample)]
    ok1 = all(universe.truth_eq(x, x).is_one for x in xs)
    result.add(f"{tag}: reflexivity is one", ok1)
    ok2 = all(
        universe.truth_eq(x, y) == universe.truth_eq(y, x) for x, y in pairs
    )
    result.add(f"{tag}: symmetry", ok2)
    ok3 = all(
        (universe.truth_eq(x, y) & universe.truth_eq(y, z)).leq(universe.truth_eq(x, z))
        for x, y, z in triples
    )
    result.add(f"{tag}: transitivity bound", ok3)
    ok4 = all(
        (universe.truth_eq(x, y) & universe.truth_mem(z, x)).leq(universe.truth_mem(z, y))
        for x, y, z in triples
    )
    result.add(f"{tag}: members transport along equality", ok4)
    ok5 = all(
        (universe.truth_eq(x, y) & universe.truth_mem(x, z)).leq(universe.truth_mem(y, z))
        for x, y, z in triples
    )
    result.add(f"{tag}: membership transports along equality", ok5)
    corpus = [parse(text) for text in _LAW6_CORPUS]
    ok6 = True
    for x, y in pairs:
        w = rng.choice(xs)
        for f in corpus:
            fx = eval_bv(f, {"v": x, "w": w}, universe)
            fy = eval_bv(f, {"v": y, "w": w}, universe)
            if not (universe.truth_eq(x, y) & fx).leq(fy):
                ok6 = False
    result.add(f"{tag}: substitution law over the corpus", ok6)
    ok_sc1 = ok_sc2 = ok_sc3 = ok_sc4 = True
    empty = universe.empty
    for b in scalars:
        for x, y in pairs:
            if universe.truth_mem(x, universe.scale(b, y)) != b & universe.truth_mem(x, y):
                ok_sc1 = False
            lhs = universe.truth_eq(universe.scale(b, x), universe.scale(b, y))
            if lhs != b.imp(universe.truth_eq(x, y)):
                ok_sc2 = False
        for x in xs:
            bx = universe.scale(b, x)
            if universe.truth_eq(bx, x) != b | universe.truth_eq(x, empty):
                ok_sc3 = False
            if universe.truth_eq(bx, empty) != ~b | universe.truth_eq(x, empty):
                ok_sc4 = False
    result.add(f"{tag}: membership in a scaled set", ok_sc1)
    result.add(f"{tag}: equality of scaled sets", ok_sc2)
    result.add(f"{tag}: scaled set equals itself", ok_sc3)
    result.add(f"{tag}: scaled set vanishes", ok_sc4)


def suite_laws(seed=0, random_samples=60) -> SuiteResult:
    """The atomic truth-value laws and the scaling identities: exhaustive
    over the four-element rank-2 fragment, randomized at rank 3."""
    rng = random.Random(seed)
    result = SuiteResult("laws")
    u4 = universe_for(2)
    _laws_on(u4, fragment_for(2, 2), u4.alg.elements(), rng, result, "B4 rank-2 exhaustive")
    for atoms in (2, 3):
        universe = universe_for(atoms)
        xs = fragment_for(atoms, 3)
        scalars = [rng.choice(universe.alg.elements()) for _ in range(4)]
        _laws_on(
            universe, xs, scalars, rng, result,
            f"{atoms}-atom rank-3 randomized", sample=random_samples,
        )
    return result


def suite_escher(seed=0, instances=102) -> SuiteResult:
    """The arrow cancellation rules on generated instances."""
    rng = random.Random(seed)
    result = SuiteResult("escher")
    fail_updown = fail_downup = fail_fun = fail_gun = 0
    configs = [(1, 3), (2, 3), (3, 2)]
    for i in range(instances):
        atoms, rank = configs[i % len(configs)]
        universe = universe_for(atoms)
        fragment = fragment_for(atoms, rank)
        xs = rng.sample(fragment, rng.randint(1, min(3, len(fragment))))
        up = arrows.ascent(xs, universe)
        down = arrows.descent(up, fragment, universe)
        closure = arrows.mix_closure(xs, fragment, universe)
        if {s.uid for s in down} != {s.uid for s in closure}:
            fail_updown += 1
        y_members = rng.sample(fragment, rng.randint(1, min(3, len(fragment))))
        y = arrows.ascent(y_members, universe)
        y_again = arrows.ascent(arrows.descent(y, fragment, universe), universe)
        if not universe.truth_eq(y_again, y).is_one:
            fail_downup += 1
        fmap = random_fiberwise_map(rng, universe, rank)
        x_dom = rng.sample(fragment, rng.randint(1, min(3, len(fragment))))
        f = arrows.ExtMap.function({x: fmap(x) for x in x_dom})
        g = arrows.ascend_function(f, universe)
        dom_up = arrows.ascent(x_dom, universe)
        cod_up = arrows.ascent([fmap(x) for x in x_dom], universe)
        back = arrows.descend_function(g, dom_up, cod_up, fragment, universe)
        for x in x_dom:
            want = f.apply(x)
            got = None
            for k, vs in back.pairs:
                if universe.truth_eq(k, x).is_one:
                    got = vs[0]
                    break
            if got is None or not universe.truth_eq(got, want).is_one:
                fail_fun += 1
                break
        g2 = arrows.ascend_function(
            arrows.ExtMap.function({k: vs[0] for k, vs in back.pairs}), universe
        )
        if not universe.truth_eq(g2, g).is_one:
            fail_gun += 1
    result.add(f"{instances} instances: up-then-down is the mixing closure",
               fail_updown == 0, f"{fail_updown} failures")
    result.add(f"{instances} instances: down-then-up returns the set",
               fail_downup == 0, f"{fail_downup} failures")
    result.add(f"{instances} instances: function up-then-down restricts to itself",
               fail_fun == 0, f"{fail_fun} failures")
    result.add(f"{instances} instances: function down-then-up returns the graph",
               fail_gun == 0, f"{fail_gun} failures")
    return result


def suite_mixing(seed=0, instances=100) -> SuiteResult:
    """Mixing reconstruction: for internally distinct families the recovered
    equality values are exactly the partition blocks."""
    rng = random.Random(seed)
    result = SuiteResult("mixing")
    failures = 0
    done = 0
    while done < instances:
        atoms = rng.randint(1, 3)
        universe = universe_for(atoms)
        fragment = fragment_for(atoms, 3)
        size = rng.randint(1, min(4, len(fragment)))
        family = []
        for x in rng.sample(fragment, min(len(fragment), 8)):
            if all(universe.truth_eq(x, y).is_zero for y in family):
                family.append(x)
            if len(family) == size:
                break
        if not family:
            continue
        parts = random_partition(rng, universe.alg)
        while len(parts) != len(family):
            k = len(family)
            masks = [0] * k
            for q in range(universe.alg.atom_count):
                masks[rng.randrange(k)] |= 1 << q
            parts = Partition(universe.alg, [universe.alg.element(m) for m in masks])
        m = universe.mix(parts, family)
        for b, x in zip(parts, family):
            if universe.truth_eq(m, x) != b:
                failures += 1
                break
        done += 1
    result.add(
        f"{instances} reconstructions are exact", failures == 0, f"{failures} failures"
    )
    return result


def suite_completion(seed=0, random_posets_count=200) -> SuiteResult:
    """Band lattices are Boolean and the refinedness conditions agree, over
    an exhaustive small census plus random posets."""
    rng = random.Random(seed)
    result = SuiteResult("completion")
    census = posets_with_bottom_upto(5)
    boolean_fail = agree_fail = 0
    for P in census:
        try:
            if P.size > 1:  # the trivial poset has no two-valued band lattice
                posets.completion(P)
        except NotBoolean:
            boolean_fail += 1
        try:
            posets.is_refined(P)
        except InternalInconsistency:
            agree_fail += 1
    result.add(
        f"exhaustive census of {len(census)} posets with bottom (size <= 5)",
        boolean_fail == 0 and agree_fail == 0,
        f"{boolean_fail} non-Boolean, {agree_fail} disagreements",
    )
    boolean_fail = agree_fail = 0
    for _ in range(random_posets_count):
        P = random_poset(rng, max_size=10)
        try:
            posets.completion(P)
        except NotBoolean:
            boolean_fail += 1
        try:
            posets.is_refined(P)
        except InternalInconsistency:
            agree_fail += 1
    result.add(
        f"{random_posets_count} random posets (size <= 10)",
        boolean_fail == 0 and agree_fail == 0,
        f"{boolean_fail} non-Boolean, {agree_fail} disagreements",
    )
    return result


def suite_forcing(seed=0) -> SuiteResult:
    """Forcing-poset combinatorics and refinedness."""
    result = SuiteResult("forcing")
    c12 = posets.forcing_c(1, 2)
    result.add("|C(1,2)| = 3 plus bottom", c12.size == 4, f"size {c12.size}")
    c22 = posets.forcing_c(2, 2)
    result.add("|C(2,2)| = 9 plus bottom", c22.size == 10, f"size {c22.size}")
    count_ok = True
    for n in range(1, 4):
        for m in range(1, 4):
            P = posets.forcing_c(n, m)
            if P.size != posets.forcing_count(n, m) + 1:
                count_ok = False
    result.add("|C(n,m)| matches the binomial sum for n,m <= 3", count_ok)
    comp = posets.completion(c12)
    atoms_ok = comp.algebra.atom_count == 2
    f0 = posets.forcing_index(c12, {0: 0})
    f1 = posets.forcing_index(c12, {0: 1})
    b0, b1 = posets.band_of(c12, f0), posets.band_of(c12, f1)
    atom_bands = sorted(m for m in (b0.mask, b1.mask))
    lattice_atoms = sorted(comp.atom_masks)
    result.add(
        "completion of C(1,2) is the four-element algebra with atoms [f0],[f1]",
        atoms_ok and atom_bands == lattice_atoms,
    )
    refined_ok = True
    for n in range(1, 4):
        for m in range(2, 4):
            answer, _ = posets.is_refined(posets.forcing_c(n, m))
            if not answer:
                refined_ok = False
    result.add("C(n,m) with bottom is refined for n <= 3, 2 <= m <= 3", refined_ok)
    return result


def suite_ultrafilter(seed=0) -> SuiteResult:
    """Automorphism sets: the defining property and the internal
    ultrafilter formula, for every automorphism on up to three atoms."""
    result = SuiteResult("ultrafilter")
    formula = is_ultrafilter("psi", "u", "one")
    for atoms in (1, 2, 3):
        universe = universe_for(atoms)
        alg = universe.alg
        carrier = universe.make(
            {universe.element_name(b): alg.one for b in alg.elements()}
        )
        one_name = universe.element_name(alg.one)
        prop_ok = True
        ultra_ok = True
        count = 0
        for perm in itertools.permutations(range(atoms)):
            rho = make_hom(alg, alg, ("permutation", perm))
            psi = universe.psi_rho(rho)
            count += 1
            for b in alg.elements():
                if universe.truth_mem(universe.element_name(b), psi) != rho(b):
                    prop_ok = False
            truth = eval_bv(
                formula, {"psi": psi, "u": carrier, "one": one_name}, universe
            )
            if not truth.is_one:
                ultra_ok = False
        result.add(
            f"{atoms} atoms, {count} automorphisms: membership recovers the map",
            prop_ok,
        )
        result.add(
            f"{atoms} atoms: internal ultrafilter formula has truth one", ultra_ok
        )
    return result


def suite_two_point(seed=0) -> SuiteResult:
    """Descent of the two-point algebra: the defining truth values and the
    Boolean isomorphism onto the descended carrier."""
    result = SuiteResult("two-point")
    for atoms in (1, 2, 3):
        universe = universe_for(atoms)
        alg = universe.alg
        tp = arrows.descend_two_point(universe)
        defining = all(
            universe.truth_eq(tp.chi[b], tp.one) == b
            and universe.truth_eq(tp.chi[b], tp.zero) == ~b
            for b in alg.elements()
        )
        result.add(f"{atoms} atoms: defining truth values of chi", defining)
        injective = all(
            universe.truth_eq(tp.chi[a], tp.chi[b]) == ~(a ^ b)
            for a in alg.elements()
            for b in alg.elements()
        )
        members = all(
            universe.truth_mem(tp.chi[b], tp.two).is_one for b in alg.elements()
        )
        iso = all(
            tp.meet(tp.chi[a], tp.chi[b]) is tp.chi[a & b]
            and tp.join(tp.chi[a], tp.chi[b]) is tp.chi[a | b]
            for a in alg.elements()
            for b in alg.elements()
        ) and all(tp.complement(tp.chi[b]) is tp.chi[~b] for b in alg.elements())
        closed = all(
            universe.truth_eq(
                universe.mix(Partition(alg, [c, ~c]), [tp.chi[a], tp.chi[b]]),
                tp.chi[(c & a) | (~c & b)],
            ).is_one
            for a in alg.elements()
            for b in alg.elements()
            for c in alg.elements()
        )
        result.add(
            f"{atoms} atoms: chi is a Boolean isomorphism onto a mix-closed carrier",
            injective and members and iso and closed,
        )
        if atoms <= 2:
            fragment = universe.enumerate_universe(atoms + 1)
            down = arrows.descent(tp.two, fragment, universe)
            image = {universe.canonicalize(tp.chi[b]).uid for b in alg.elements()}
            result.add(
                f"{atoms} atoms: exhaustive descent equals the chi image",
                image == {s.uid for s in down},
            )
    return result


def suite_realization(seed=0, instances=50) -> SuiteResult:
    """Boolean-valued realization of metric carriers: the metric is exactly
    the negated equality of the injected images."""
    rng = random.Random(seed)
    result = SuiteResult("realization")
    failures = 0
    for i in range(instances):
        atoms = rng.randint(1, 3)
        universe = universe_for(atoms)
        alg = universe.alg
        if i % 5 == 0:
            carrier = [f"x{k}" for k in range(rng.randint(1, 5))]
            X = bsets.make_bset(alg, carrier, preset="discrete")
        else:
            X = random_bset(rng, alg, rng.randint(1, 5))
        R = bsets.realize_bset(X, universe)
        for a in X.carrier:
            for b in X.carrier:
                if X.d(a, b) != ~universe.truth_eq(R.iota[a], R.iota[b]):
                    failures += 1
    result.add(
        f"{instances} random carriers (discrete cases included): exact metric recovery",
        failures == 0,
        f"{failures} failures",
    )
    universe = universe_for(2)
    X = bsets.make_bset(universe.alg, ["x0", "x1"], preset="discrete")
    R = bsets.realize_bset(X, universe)
    from .hf import ordinal

    names_ok = all(
        universe.truth_eq(R.iota[f"x{i}"], universe.canonical_name(ordinal(i))).is_one
        for i in range(2)
    )
    result.add("discrete carrier realizes as standard names", names_ok)
    return result


def _random_signature_formula(rng, sig, scope, depth):
    counter = itertools.count()

    def term(scope, d):
        roll = rng.random()
        if roll < 0.5 or d <= 0:
            return Var(rng.choice(scope))
        if roll < 0.7:
            return Const("c0")
        if roll < 0.85:
            return App("s", (term(scope, d - 1),))
        return App("op", (term(scope, d - 1), term(scope, d - 1)))

    def go(scope, depth):
        if depth <= 0 or rng.random() < 0.3:
            if rng.random() < 0.5:
                return Pred("le", (term(scope, 1), term(scope, 1)))
            return Eq(term(scope, 1), term(scope, 1))
        kind = rng.choice(["not", "and", "or", "imp", "forall", "exists"])
        if kind == "not":
            return Not(go(scope, depth - 1))
        if kind in ("and", "or", "imp"):
            node = {"and": And, "or": Or, "imp": Imp}[kind]
            return node(go(scope, depth - 1), go(scope, depth - 1))
        v = f"u{next(counter)}"
        body = go(scope + [v], depth - 1)
        return (CarrierForall if kind == "forall" else CarrierExists)(v, body)

    return go(list(scope), depth)


def _classical_model_check(f, tables, carrier, assignment):
    """Independent two-valued oracle over the same tables."""

    def term(t, env):
        if isinstance(t, Var):
            return env[t.name]
        if isinstance(t, Const):
            return tables["consts"][t.symbol]
        if isinstance(t, App):
            args = tuple(term(a, env) for a in t.args)
            return tables["ops"][t.symbol][args]
        raise TypeError(t)

    def go(f, env):
        if isinstance(f, Pred):
            args = tuple(term(a, env) for a in f.args)
            return tables["preds"][f.symbol][args]
        if isinstance(f, Eq):
            return term(f.left, env) == term(f.right, env)
        if isinstance(f, Not):
            return not go(f.body, env)
        if isinstance(f, And):
            return go(f.left, env) and go(f.right, env)
        if isinstance(f, Or):
            return go(f.left, env) or go(f.right, env)
        if isinstance(f, Imp):
            return (not go(f.left, env)) or go(f.right, env)
        if isinstance(f, CarrierForall):
            return all(go(f.body, {**env, f.var: a}) for a in carrier)
        if isinstance(f, CarrierExists):
            return any(go(f.body, {**env, f.var: a}) for a in carrier)
        raise TypeError(f)

    return go(f, dict(assignment))


def suite_bsystem(seed=0, cases=200) -> SuiteResult:
    """Over discrete carriers with classical tables the system truth value
    is two-valued and coincides with ordinary model checking."""
    rng = random.Random(seed)
    result = SuiteResult("bsystem")
    failures = not_two_valued = 0
    for i in range(cases):
        atoms = rng.randint(1, 3)
        universe = universe_for(atoms)
        alg = universe.alg
        size = rng.randint(2, 4)
        carrier = [f"a{k}" for k in range(size)]
        X = bsets.make_bset(alg, carrier, preset="discrete")
        sig = Signature({"c0": 0, "s": 1, "op": 2}, {"le": 2})
        succ = {(a,): carrier[(k + 1) % size] for k, a in enumerate(carrier)}
        op = {
            (a, b): carrier[min(i2, j2)]
            for i2, a in enumerate(carrier)
            for j2, b in enumerate(carrier)
        }
        le_bool = {
            (a, b): (carrier.index(a) <= carrier.index(b))
            for a in carrier
            for b in carrier
        }
        le = {k: alg.one if v else alg.zero for k, v in le_bool.items()}
        system = bsets.BSystem(
            X, sig, {"c0": carrier[0], "s": succ, "op": op}, {"le": le}
        )
        f = _random_signature_formula(rng, sig, ["x", "y"], rng.randint(1, 3))
        assignment = {"x": rng.choice(carrier), "y": rng.choice(carrier)}
        truth = bsets.eval_bsystem(system, f, assignment)
        if not (truth.is_zero or truth.is_one):
            not_two_valued += 1
            continue
        tables = {
            "consts": {"c0": carrier[0]},
            "ops": {"s": succ, "op": op},
            "preds": {"le": le_bool},
        }
        classical = _classical_model_check(f, tables, carrier, assignment)
        if classical != truth.is_one:
            failures += 1
    result.add(
        f"{cases} formula/assignment pairs match classical model checking",
        failures == 0 and not_two_valued == 0,
        f"{failures} mismatches, {not_two_valued} non-two-valued",
    )
    return result


def suite_maximum(seed=0, instances=100) -> SuiteResult:
    """The greedy witness attains the fragment supremum exactly."""
    rng = random.Random(seed)
    result = SuiteResult("maximum")
    failures = 0
    for i in range(instances):
        atoms = rng.randint(1, 3)
        universe = universe_for(atoms)
        rank = 2 if atoms == 3 else 3
        fragment = fragment_for(atoms, rank)
        f = random_restricted_formula(rng, ["x", "y"], rng.randint(1, 3))
        assignment = {"y": rng.choice(fragment)}
        witness, value = find_max_witness(f, "x", assignment, fragment, universe)
        attained = eval_bv(f, {**assignment, "x": witness}, universe)
        expected = universe.alg.zero
        for u in fragment:
            expected = expected | eval_bv(f, {**assignment, "x": u}, universe)
        if attained != value or value != expected:
            failures += 1
    result.add(
        f"{instances} witnesses attain the supremum exactly",
        failures == 0,
        f"{failures} failures",
    )
    return result


SUITES = {
    "los": suite_los,
    "transfer": suite_transfer,
    "laws": suite_laws,
    "escher": suite_escher,
    "mixing": suite_mixing,
    "completion": suite_completion,
    "forcing": suite_forcing,
    "ultrafilter": suite_ultrafilter,
    "two-point": suite_two_point,
    "realization": suite_realization,
    "bsystem": suite_bsystem,
    "maximum": suite_maximum,
}


def run_suite(name, seed=0) -> SuiteResult:
    if name == "all":
        combined = SuiteResult("all")
        for sub in SUITES.values():
            combined.checks.extend(sub(seed=seed).checks)
        return combined
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; pick from {sorted(SUITES)} or 'all'")
    return SUITES[name](seed=seed)
