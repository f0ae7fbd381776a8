"""Acceptance criteria, one test per criterion.

Every expectation is exact: the domain is finite Boolean algebra, so there
are no numeric tolerances anywhere.  Each test prints one PASS/FAIL line
(visible with ``pytest -s`` or on failure).  Criteria with stated time
budgets assert them.
"""

import time

from bvm.suites import (
    suite_bsystem,
    suite_completion,
    suite_escher,
    suite_forcing,
    suite_laws,
    suite_los,
    suite_maximum,
    suite_mixing,
    suite_realization,
    suite_transfer,
    suite_two_point,
    suite_ultrafilter,
)


def report(number, title, result, elapsed=None):
    status = "PASS" if result.ok else "FAIL"
    timing = f" [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"criterion {number:2d} [{status}]{timing} {title}")
    for line in result.lines():
        print("   ", line)
    assert result.ok, f"criterion {number} failed: {title}"


def test_criterion_01_los_fiber_soundness():
    start = time.monotonic()
    result = suite_los(seed=0, cases=500)
    elapsed = time.monotonic() - start
    report(1, "fiber soundness on 500 random restricted formulas", result, elapsed)
    assert elapsed < 60.0, f"took {elapsed:.1f}s, budget is 60s"


def test_criterion_02_restricted_transfer():
    result = suite_transfer(seed=0, cases=200)
    report(2, "restricted transfer on 200 random formulas", result)


def test_criterion_03_truth_laws_and_scaling_identities():
    result = suite_laws(seed=0)
    report(3, "atomic truth laws and scaling identities", result)


def test_criterion_04_escher_rules():
    result = suite_escher(seed=0, instances=102)
    report(4, "arrow cancellation rules on 102 instances", result)


def test_criterion_05_mixing_reconstruction():
    result = suite_mixing(seed=0, instances=100)
    report(5, "mixing reconstruction on 100 instances", result)


def test_criterion_06_poset_completion():
    start = time.monotonic()
    result = suite_completion(seed=0, random_posets_count=200)
    elapsed = time.monotonic() - start
    report(6, "poset completion census and refinedness agreement", result, elapsed)
    assert elapsed < 120.0, f"took {elapsed:.1f}s, budget is 120s"


def test_criterion_07_forcing_combinatorics():
    result = suite_forcing(seed=0)
    report(7, "forcing poset combinatorics", result)


def test_criterion_08_automorphism_ultrafilters():
    result = suite_ultrafilter(seed=0)
    report(8, "automorphism sets and the internal ultrafilter formula", result)


def test_criterion_09_two_point_descent():
    result = suite_two_point(seed=0)
    report(9, "descent of the two-point algebra", result)


def test_criterion_10_bset_realization():
    result = suite_realization(seed=0, instances=50)
    report(10, "metric carriers realize with exact distance recovery", result)


def test_criterion_11_bsystem_conventionality():
    result = suite_bsystem(seed=0, cases=200)
    report(11, "discrete systems match classical model checking", result)


def test_criterion_12_fragment_maximum():
    result = suite_maximum(seed=0, instances=100)
    report(12, "greedy witnesses attain the fragment supremum", result)
