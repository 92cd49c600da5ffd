"""End-to-end acceptance checks.

Each test is one named criterion, runs standalone, and prints a
PASS/FAIL line (visible with ``pytest -v -s tests/test_acceptance.py``).
"""
from __future__ import annotations

import math
import random
import time
from itertools import combinations

import pytest
from click.testing import CliRunner

from cyclosemi import census, family, rootloc, semigroup
from cyclosemi.cli import main as cli_main
from cyclosemi.polycore import IntPoly, cyclotomic, cyclotomic_test


def _report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {name}: {status}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_criterion_1_example_polynomial_exact():
    """<5,6,7,8>: exact polynomial and symmetry."""
    start = time.time()
    s = semigroup.from_generators([5, 6, 7, 8])
    expected = IntPoly((1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1))
    ok = s.semigroup_polynomial() == expected and s.is_symmetric()
    elapsed = time.time() - start
    _report("1 example-exactness", ok and elapsed < 1.0, f"{elapsed:.3f}s")


def test_criterion_2_scan_ranges_via_cli():
    """Both classification sweeps exit 0 with every row agreeing."""
    runner = CliRunner()
    start = time.time()
    first = runner.invoke(
        cli_main, ["scan", "--t", "0", "--n-min", "5", "--n-max", "79"]
    )
    second = runner.invoke(
        cli_main, ["scan", "--t", "1", "--n-min", "8", "--n-max", "119"]
    )
    elapsed = time.time() - start
    import json

    rows1 = json.loads(first.output)["rows"] if first.exit_code == 0 else []
    rows2 = json.loads(second.output)["rows"] if second.exit_code == 0 else []
    ok = (
        first.exit_code == 0
        and second.exit_code == 0
        and len(rows1) == 75
        and len(rows2) == 112
        and all(r["agree"] for r in rows1 + rows2)
        and elapsed < 60.0
    )
    _report("2 scan-sweeps", ok, f"{len(rows1)}+{len(rows2)} rows, {elapsed:.1f}s")


def test_criterion_3_closed_form_grid():
    """Closed-form polynomial vs generator-derived, plus gap structure,
    on the full (n, t) grid."""
    start = time.time()
    failures = []
    for t in range(6):
        n_lo = max(6 * t + 2, 3)  # (2, 0) degenerates to <2>
        for n in range(n_lo, 6 * t + 63):
            params = family.FamilyParams(n, t)
            s = family.family_semigroup(params)
            closed = family.family_polynomial_closed_form(params)
            if closed != s.semigroup_polynomial():
                failures.append((n, t, "polynomial"))
                continue
            gens = set(family.family_generators(params))
            extra = {2 * n - 4 * t + 4 * j + k for j in range(t) for k in (0, 1, 2)}
            members_below = {
                v for v in range(1, 2 * n) if s.contains(v) and v not in gens
            }
            if members_below != extra:
                failures.append((n, t, "gap-structure"))
            if not all(s.contains(v) for v in range(2 * n, 2 * n + 2 * n)):
                failures.append((n, t, "tail"))
            if s.contains(2 * n - 1) or s.frobenius != 2 * n - 1 or s.genus != n:
                failures.append((n, t, "frobenius/genus"))
    elapsed = time.time() - start
    ok = not failures and elapsed < 120.0
    _report("3 closed-form-grid", ok, f"{failures[:3] if failures else 'all match'}, {elapsed:.1f}s")


def test_criterion_4_cyclotomicity_soundness():
    """200 random cyclotomic products round-trip exactly; adding a
    non-cyclotomic factor flips the verdict."""
    rng = random.Random(20260823)
    indices = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 24]
    junk = IntPoly((-1, -1, 1))  # x^2 - x - 1
    failures = 0
    for _ in range(200):
        product = IntPoly.one()
        expected: dict[int, int] = {}
        degree = 0
        while True:
            d = rng.choice(indices)
            phi_poly = cyclotomic(d)
            if degree + phi_poly.degree > 24:
                break
            product = product * phi_poly
            degree += phi_poly.degree
            expected[d] = expected.get(d, 0) + 1
            if rng.random() < 0.3:
                break
        report = cyclotomic_test(product)
        if report.factor_dict() != expected or not report.is_cyclotomic:
            failures += 1
        tainted = cyclotomic_test(product * junk)
        if tainted.is_cyclotomic or tainted.factor_dict() != expected:
            failures += 1
    _report("4 cyclotomicity-soundness", failures == 0, f"{failures} failures")


def test_criterion_5_low_dimension_equivalence():
    """Census to genus 15: no e<=3 symmetric/cyclotomic disagreement;
    genus totals through 6 match an independent brute force."""
    start = time.time()
    table = census.enumerate_by_genus(15)
    equivalence = census.low_dimension_equivalence_holds(table)

    def brute_force(g: int) -> int:
        if g == 0:
            return 1
        count = 0
        for gaps in combinations(range(1, 2 * g), g):
            gap_set = set(gaps)
            frobenius = max(gaps)
            members = [v for v in range(1, frobenius + 1) if v not in gap_set]
            closed = all(
                a + b > frobenius or a + b not in gap_set
                for i, a in enumerate(members)
                for b in members[i:]
            )
            if closed:
                count += 1
        return count

    totals = table.genus_totals(15)
    oracle = [brute_force(g) for g in range(7)]
    elapsed = time.time() - start
    ok = (
        equivalence
        and totals[:7] == oracle
        and totals[:7] == [1, 1, 2, 4, 7, 12, 23]
        and elapsed < 60.0
    )
    _report("5 low-dimension-equivalence", ok, f"totals {totals[:7]}, {elapsed:.1f}s")


def test_criterion_6_root_modulus_band():
    """All roots inside the (log n)^2 / n band, and at least one root
    detectably off the unit circle."""
    start = time.time()
    failures = []
    for n in (12, 20, 50, 100, 150):
        report = rootloc.theorem7_band_check(n)
        roots = rootloc.complex_roots(rootloc.family_band_polynomial(n))
        if len(roots) != 2 * n or not report.passed:
            failures.append((n, "band"))
        if max(abs(abs(z) - 1) for z in roots) <= 1e-6:
            failures.append((n, "no off-circle witness"))
    elapsed = time.time() - start
    ok = not failures and elapsed < 30.0
    _report("6 root-modulus-band", ok, f"{failures or 'all in band'}, {elapsed:.1f}s")


def test_criterion_7_certificates():
    """Exclusion and interval sign certificates at the desk-scale
    witnesses, with the root-count bound."""
    start = time.time()
    exclusion_ok = all(
        rootloc.exclusion_check(rootloc.QKernel(n, t))
        for n, t in ((80, 0), (200, 0), (520, 1))
    )
    failures = []
    for n, t in ((200, 0), (520, 1)):
        report = rootloc.certificate_check(rootloc.QKernel(n, t))
        if not report.all_hold:
            failures.append((n, t, "flags"))
        if report.root_count > 2 * n - 1:
            failures.append((n, t, "count"))
    count_80 = rootloc.count_unit_circle_roots(rootloc.QKernel(80, 0))
    elapsed = time.time() - start
    ok = exclusion_ok and not failures and count_80 <= 159
    _report("7 certificates", ok, f"{failures or 'all hold'}, {elapsed:.1f}s")


def test_criterion_8_symmetry_criteria_agreement():
    """Three symmetry criteria agree on every semigroup to genus 12."""
    from cyclosemi.census import gap_polynomial
    from cyclosemi.polycore import is_palindromic

    disagreements = []

    def visitor(c):
        palindrome = is_palindromic(gap_polynomial(c.gaps, c.frobenius))
        reflection = c.symmetric  # classify_node uses gap reflection
        genus_criterion = (c.frobenius == -1) or (2 * c.genus == c.frobenius + 1)
        if not (palindrome == reflection == genus_criterion):
            disagreements.append(c.gaps)

    census.enumerate_by_genus(12, visitor=visitor)
    _report("8 symmetry-criteria", not disagreements, f"{len(disagreements)} disagreements")
