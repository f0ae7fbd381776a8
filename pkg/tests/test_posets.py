"""Posets with bottom: polars, bands, completion, refinedness, forcing."""

import random

import pytest

from bvm.errors import BadSpec, SizeOverflow
from bvm.posets import (
    Band,
    FinPoset,
    all_bands,
    antichain,
    band_of,
    chain,
    completion,
    forcing_c,
    forcing_count,
    forcing_index,
    is_refined,
    polar,
    polar_mask,
)
from bvm.suites import posets_with_bottom_upto, random_poset


def test_polar_examples():
    P = forcing_c(1, 2)
    assert polar(P, []).mask == P.full_mask()
    assert polar(P, range(P.size)).mask == P.bottom_mask
    f0 = forcing_index(P, {0: 0})
    f1 = forcing_index(P, {0: 1})
    got = polar(P, [f0])
    assert set(got.members()) == {0, f1}


def test_polar_galois_property():
    rng = random.Random(2)
    for P in posets_with_bottom_upto(5):
        for mask in range(1 << P.size):
            once = polar_mask(P, mask)
            assert polar_mask(P, polar_mask(P, once)) == once
    for _ in range(50):
        P = random_poset(rng, max_size=10)
        for _ in range(40):
            mask = rng.randrange(1 << P.size)
            once = polar_mask(P, mask)
            assert polar_mask(P, polar_mask(P, once)) == once


def test_band_monotone_and_complement_laws():
    rng = random.Random(5)
    for P in posets_with_bottom_upto(5) + [random_poset(rng, 9) for _ in range(20)]:
        for p in range(P.size):
            for q in range(P.size):
                if P.leq(p, q):
                    assert band_of(P, p).mask & band_of(P, q).mask == band_of(P, p).mask
        for mask in all_bands(P):
            comp = polar_mask(P, mask)
            assert mask & comp == P.bottom_mask
            joined = polar_mask(P, polar_mask(P, mask | comp))
            assert joined == P.full_mask()


def test_completion_examples():
    comp = completion(chain(3))
    assert comp.algebra.atom_count == 1
    assert len(comp.bands) == 2
    comp = completion(forcing_c(1, 2))
    assert comp.algebra.atom_count == 2
    assert len(comp.bands) == 4
    for k in (1, 2, 3):
        comp = completion(antichain(k))
        assert comp.algebra.atom_count == k
        assert len(comp.bands) == 2 ** k


def test_completion_band_element_translation():
    P = forcing_c(1, 2)
    comp = completion(P)
    for band in comp.bands:
        elem = comp.to_elem(band)
        assert comp.from_elem(elem).mask == band.mask
    f0 = forcing_index(P, {0: 0})
    assert comp.to_elem(comp.band_of(f0)) in comp.algebra.atoms()


def test_completion_rejects_trivial_poset():
    with pytest.raises(BadSpec):
        completion(FinPoset(["0"], []))


def test_is_refined_examples():
    answer, report = is_refined(chain(3))
    assert not answer
    assert not any(report.to_json()[k] for k in (
        "separation", "principal_intervals", "injective", "dense_embedding"
    ))
    answer, _ = is_refined(forcing_c(1, 2))
    assert answer
    # a finite Boolean algebra qua poset is refined
    labels = ["0"] + [f"e{m}" for m in range(1, 8)]
    pairs = [
        (a, b) for a in range(8) for b in range(8) if a & b == a
    ]
    B8 = FinPoset(labels, pairs)
    answer, _ = is_refined(B8)
    assert answer


def test_refinedness_needs_order_reflection_not_bare_injectivity():
    # distinct principal bands, yet not refined: the documented example
    P = FinPoset(
        ["0", "p1", "p2", "p3", "p4", "p5"],
        [(1, 4), (2, 4), (3, 4), (2, 5), (3, 5)],
    )
    bands = [band_of(P, p).mask for p in range(P.size)]
    assert len(set(bands)) == P.size  # bare injectivity holds
    answer, report = is_refined(P)
    assert not answer  # all four conditions still agree on False
    assert not report.injective  # order reflection fails


def test_forcing_counts():
    assert forcing_c(1, 2).size == 4
    assert forcing_c(2, 2).size == 10
    for n in range(1, 4):
        for m in range(1, 4):
            assert forcing_c(n, m).size == forcing_count(n, m) + 1
    assert forcing_count(2, 2) == 9
    assert forcing_count(3, 3) == 64


def test_forcing_kappa():
    # kappa bounds the domain size strictly; kappa above the domain changes nothing
    only_empty = forcing_c(2, 2, kappa=1)
    assert only_empty.size == 2
    singles = forcing_c(2, 2, kappa=2)
    assert singles.size == 1 + 1 + 4
    assert forcing_c(2, 2, kappa=5).size == forcing_c(2, 2).size


def test_forcing_refined_up_to_three():
    for n in range(1, 4):
        for m in range(2, 4):
            answer, _ = is_refined(forcing_c(n, m))
            assert answer, (n, m)


def test_forcing_completion_atoms_are_total_functions():
    P = forcing_c(1, 2)
    comp = completion(P)
    f0 = forcing_index(P, {0: 0})
    f1 = forcing_index(P, {0: 1})
    assert sorted(comp.atom_masks) == sorted(
        (band_of(P, f0).mask, band_of(P, f1).mask)
    )


def test_size_overflow():
    with pytest.raises(SizeOverflow):
        forcing_c(4, 4, cap=100)
    with pytest.raises(BadSpec):
        forcing_c(0, 2)


def test_antisymmetry_enforced():
    with pytest.raises(BadSpec):
        FinPoset(["0", "a", "b"], [(1, 2), (2, 1)])


def test_dot_output():
    comp = completion(forcing_c(1, 2))
    dot = comp.to_dot()
    assert dot.startswith("digraph bands")
    assert dot.count("->") == 4  # the four-element diamond has four covers
    assert '"{0}"' in dot or "(empty)" in dot or "{0" in dot
