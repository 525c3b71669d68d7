"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All checks are exact; there are no tolerances anywhere in the library.
"""

import pytest

from stanleychar import verify


def _run(name: str, suite: str, kmax: int = 6) -> None:
    results = verify.SUITES[suite](kmax=kmax)
    ok = all(r.ok for r in results)
    print(f"{'PASS' if ok else 'FAIL'} criterion {name}")
    failures = [r.line() for r in results if not r.ok]
    assert ok, "\n".join(failures)


def test_criterion_01_eq1_fixture():
    _run("1: three-rectangle 5-cycle coefficients", "eq1")


def test_criterion_02_kerov_fixture():
    _run("2: Kerov polynomials K_1..K_5", "kerov")


def test_criterion_03_oracle_equivalence():
    _run("3: factorization sums = Murnaghan-Nakayama, k <= 6", "oracle")


def test_criterion_04_linear_chain():
    _run("4: linear coefficient chain, k <= 6", "linear")


def test_criterion_05_quadratic_chain():
    _run("5: quadratic coefficient chain + inclusion-exclusion, k <= 6", "quadratic")


def test_criterion_06_swap_symmetry():
    _run("6: swap symmetry, k <= 6", "swap")


def test_criterion_07_free_cumulant_structure():
    _run("7: free cumulant leading structure, k <= 6", "cumulant")


def test_criterion_08_dilation_limit():
    _run("8: exact dilation limit, k <= 5", "dilation")


def test_criterion_09_maps():
    _run("9: torus fixture, embedding sums, planar=minimal", "maps")


def test_criterion_10_positivity():
    _run("10: Kerov positivity, k <= 6", "positivity")


def test_criterion_11_jack_fixture():
    _run("11: deformed 3-cycle fixture at gamma=0", "jack-fixture")


def test_criterion_12_determinism():
    one, ok1, _ = verify.run_suites(list(verify.SUITES), kmax=6, threads=1)
    many, ok2, _ = verify.run_suites(list(verify.SUITES), kmax=6, threads=4)
    ok = ok1 and ok2 and one == many
    print(f"{'PASS' if ok else 'FAIL'} criterion 12: identical reports at 1 and 4 threads")
    assert ok1 and ok2
    assert one == many
