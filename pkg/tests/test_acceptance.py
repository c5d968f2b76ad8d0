"""Acceptance criteria 1-12, each at its stated tolerance and time budget.

Every test prints one ``ACCEPTANCE <k> PASS|FAIL`` line with the measured values.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import pytest

from dscx import goldens
from dscx.census import (
    census,
    distinct_degrees,
    dsc1_gamma,
    gamma_404,
    gamma_405_curve,
    gamma_endpoint,
    verify_degree_conjectures,
)
from dscx.charpoly import (
    adjacency_charpoly,
    adjacency_coeff_check,
    adjacency_spectrum_stats,
    dsc1_spectrum,
    laplacian_charpoly_bundle,
    lambda2_exact,
    matching_polynomial_check,
    pi_coeff_check,
    staircase_identity_check,
)
from dscx.complex import build
from dscx.counting import (
    codiagonal,
    fvector_recursive,
    log_numbers,
    n0_closed,
    nd_by_series,
    total_egf,
    total_simplices,
)
from dscx.growth import g_plus, g_plus_fit_ratio
from dscx.hodge import (
    betti,
    boundary_composition_is_zero,
    complex_spectrum,
    hodge_laplacian,
    hodge_matching_check,
    spectral_dimension_estimate,
)
from dscx.polynomial import IntPolynomial


@pytest.fixture
def report(capsys):
    def emit(k: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {k:>2} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def test_01_fvector_goldens(report):
    t = time.perf_counter()
    rec_ok = all(fvector_recursive(n) == f for n, f in goldens.FVECTORS.items())
    enum_ok = all(build(n).fvector() == fvector_recursive(n) for n in range(7))
    dt = time.perf_counter() - t
    report(1, rec_ok and enum_ok and dt < 1.0, f"recursion n<=9 {rec_ok}, enumeration n<=6 {enum_ok}, {dt:.2f}s")


def test_02_series_and_closed_forms(report):
    t = time.perf_counter()
    series_ok = all(
        nd_by_series(d, n) == fvector_recursive(n)[d] for n in range(13) for d in range(n + 1)
    )
    codiag_ok = all(
        codiagonal(n, p) == fvector_recursive(n)[n - p] for n in range(15) for p in range(min(5, n) + 1)
    )
    tele_ok = all(
        sum(fvector_recursive(n)) == total_simplices(n) == n0_closed(n + 1) - n0_closed(n) for n in range(21)
    )
    egf = total_egf(13)
    egf_ok = all(egf.egf_coefficient(n) == sum(fvector_recursive(n)) for n in range(13))
    dt = time.perf_counter() - t
    ok = series_ok and codiag_ok and tele_ok and egf_ok and dt < 5.0
    report(2, ok, f"series {series_ok}, codiagonal {codiag_ok}, telescope {tele_ok}, egf {egf_ok}, {dt:.2f}s")


def test_03_logarithmic_numbers(report):
    values = [log_numbers(n) for n in range(1, 9)]
    tele_ok = all(log_numbers(n + 1) - log_numbers(n) == n0_closed(n) for n in range(1, 11))
    ok = values == [1, 3, 8, 24, 89, 415, 2372, 16072] and tele_ok
    report(3, ok, f"M(1..8)={values}, telescope n<=10 {tele_ok}")


def test_04_census_goldens(report):
    t = time.perf_counter()
    complexes = {n: build(n) for n in range(1, 9)}
    q_bad = [
        key for key, entries in goldens.CENSUS.items()
        if census(complexes[key[1]], key[0]).as_lists() != [list(e) for e in entries]
    ]
    k_bad = [
        key for key, ks in goldens.DISTINCT_DEGREES.items() if distinct_degrees(complexes[key[1]], key[0]) != ks
    ]
    for p, ks in goldens.STATIONARY_DEGREES.items():
        for n in range(p + 1, 9):
            if distinct_degrees(complexes[n], n - p) != ks:
                k_bad.append((n - p, n))
    dt = time.perf_counter() - t
    ok = not q_bad and not k_bad and dt < 600
    report(4, ok, f"{len(goldens.CENSUS)} Q arrays, K lists; mismatches Q={q_bad} K={k_bad}; {dt:.1f}s")


def test_05_conjecture_suite(report):
    rep = verify_degree_conjectures(8)
    bad = [(r.identity, r.n, r.d) for r in rep.failures]
    report(5, rep.passed, f"{len(rep.rows)} checks over {len(rep.summary())} identities, failures {bad}")


def test_06_gamma_estimators(report):
    t = time.perf_counter()
    g1 = dsc1_gamma()
    g1_ok = abs(g1 - 2.855) <= 1e-3
    endpoint = gamma_endpoint(8).gamma
    closed = gamma_404(8).gamma
    close_ok = abs(closed - endpoint) <= 0.05
    deltas = [0.05 * k for k in range(1, 19)]
    curves = {n: [g for _, g in gamma_405_curve(n, deltas)] for n in (70, 200, 10_000)}
    mono_delta = all(ys == sorted(ys) for ys in curves.values())
    toward_two = all(curves[70][i] > curves[200][i] > curves[10_000][i] > 2.0 for i in range(len(deltas)))
    dt = time.perf_counter() - t
    ok = g1_ok and close_ok and mono_delta and toward_two and dt < 1.0
    report(
        6,
        ok,
        f"dsc1 gamma {g1:.4f}; closed form {closed:.4f} vs endpoint {endpoint:.4f} "
        f"(|diff| {abs(closed - endpoint):.4f}, tol 0.05); curves increasing {mono_delta}, decreasing in n {toward_two}",
    )


def test_07_growth_rates(report):
    t = time.perf_counter()
    g2 = float(g_plus(2))
    g3 = float(g_plus(3))
    ratios = [g_plus_fit_ratio(m) for m in range(8, 21)]
    dt = time.perf_counter() - t
    ok = (
        abs(g2 - (5 + math.sqrt(5)) / 2) < 1e-12
        and abs(g3 - 5.491) <= 1e-3
        and all(0.9 <= r <= 1.1 for r in ratios)
        and dt < 5.0
    )
    report(7, ok, f"g+(2)={g2:.12f}, g+(3)={g3:.5f}, fit ratios [{min(ratios):.4f}, {max(ratios):.4f}], {dt:.2f}s")


def test_08_hodge_properties(report):
    problems = []
    t = time.perf_counter()
    for model, nmax in ((None, 5), ("dsc2", 6)):
        for n in range(1, nmax + 1):
            c = build(n, model)
            f = c.fvector() + [0]
            for d in range(c.max_dim + 1):
                if 1 <= d < c.max_dim and not boundary_composition_is_zero(c, d):
                    problems.append(("boundary", c.model_name, n, d))
                rep = complex_spectrum(c, d)
                if rep.eigenvalues[0] < -rep.tol_zero:
                    problems.append(("psd", c.model_name, n, d))
                # the down term vanishes at d = 0, where L is the graph Laplacian
                down = (d + 1) * f[d] if d >= 1 else 0
                if int(hodge_laplacian(c, d).diagonal().sum()) != down + (d + 2) * f[d + 1]:
                    problems.append(("trace", c.model_name, n, d))
                if rep.zero_count != (1 if d == 0 else 0):
                    problems.append(("betti", c.model_name, n, d))
                if d < c.max_dim and not hodge_matching_check(c, d, tol=1e-8).matched:
                    problems.append(("matching", c.model_name, n, d))
    gap_ok = True
    for n in range(2, 7):
        c = build(n, "dsc2")
        l2 = complex_spectrum(c, 0).lambda2
        l1 = complex_spectrum(c, 1).lambda_min
        gap_ok &= abs(l2 - l1) <= 1e-8 * max(1.0, l2)
    small = time.perf_counter() - t
    t = time.perf_counter()
    big = complex_spectrum(build(6), 1)
    big_dt = time.perf_counter() - t
    big_ok = big.size == 4429 and betti(build(6), 1) == 0 and big_dt < 600
    ok = not problems and gap_ok and big_ok
    report(
        8,
        ok,
        f"problems {problems}; dsc(2) lambda2 = lambda1 {gap_ok}; small cases {small:.1f}s; "
        f"dsc n=6 d=1 N={big.size} in {big_dt:.1f}s",
    )


def test_09_charpoly_goldens(report):
    t = time.perf_counter()
    adj_ok = all(
        adjacency_charpoly(n) == IntPolynomial(a) * IntPolynomial(b)
        for n, (a, b) in goldens.ADJACENCY_FACTORS.items()
    )
    adj_ok &= all(matching_polynomial_check(n) for n in range(2, 5))
    adj_coeff = all(adjacency_coeff_check(n).passed for n in range(4, 10))
    bundle = laplacian_charpoly_bundle(9)
    pi_ok = all(list(bundle.factor(i).coeffs) == c for i, c in goldens.PI_FACTORS.items())
    pi_ok &= len(bundle.factor(7).coeffs) == 65
    pi_coeff = all(pi_coeff_check(n, bundle).passed for n in range(3, 10))
    dt = time.perf_counter() - t
    ok = adj_ok and adj_coeff and pi_ok and pi_coeff and dt < 30
    report(
        9,
        ok,
        f"adjacency factors {adj_ok}, adjacency coefficients n=4..9 {adj_coeff}, "
        f"pi_1..pi_7 {pi_ok}, laplacian coefficients n<=9 {pi_coeff}, {dt:.1f}s",
    )


def test_10_tree_spectral_constants(report):
    t = time.perf_counter()
    scaled = {n: lambda2_exact(n).scaled for n in (12, 13)}
    poly_dt = time.perf_counter() - t
    lam_ok = all(abs(v - 1.77525) <= 1e-3 for v in scaled.values()) and poly_dt < 60
    stair_bad = [
        (k, n) for n in range(1, 14) for k in range(1, n + 1) if not staircase_identity_check(k, n).passed
    ]
    t = time.perf_counter()
    reports = [dsc1_spectrum(n, ack_resources=True) for n in range(10, 14)]
    matrix_dt = time.perf_counter() - t
    agree = all(
        abs(r.lambda2 / lambda2_exact(r.n).value - 1) <= 1e-8 for r in reports
    )
    ds = spectral_dimension_estimate(reports).fit
    stats = adjacency_spectrum_stats(range(2, 13), fit_min_n=4, tail_n=12)
    lmax = stats.lambda_max_intercept
    tail = stats.tail_B
    lmin = stats.lambda_min_scaled[12]
    ok = (
        lam_ok
        and not stair_bad
        and agree
        and abs(ds - 2.0) <= 0.1
        and abs(lmax - 1.41) <= 0.05
        and abs(tail - 0.35) <= 0.05
        and abs(lmin - 0.75) <= 0.1
        and matrix_dt < 1800
    )
    report(
        10,
        ok,
        f"lambda2*2^n {', '.join(f'n={n}: {v:.6f}' for n, v in scaled.items())} ({poly_dt:.2f}s); "
        f"staircase failures {stair_bad}; d_s {ds:.4f}; lambda_max/sqrt(n) -> {lmax:.4f}; "
        f"tail B {tail:.4f}; lambda_min*sqrt(12) {lmin:.4f}; matrix route n=10..13 {matrix_dt:.0f}s",
    )


def test_11_dsc2_spectral_dimension(report):
    reports = [complex_spectrum(build(n, "dsc2"), 0) for n in range(4, 7)]
    est = spectral_dimension_estimate(reports)
    ok = abs(est.fit - 3.0) <= 0.4
    pairs = ", ".join(f"{a}-{b}: {v:.3f}" for a, b, v in est.pairwise)
    report(11, ok, f"d_s fit {est.fit:.3f} (pairs {pairs})")


def test_12_divergence_trend(report):
    reports = [complex_spectrum(build(n), 0) for n in range(3, 7)]
    pairs = [v for _, _, v in spectral_dimension_estimate(reports).pairwise]
    ok = all(a < b for a, b in zip(pairs, pairs[1:]))
    report(12, ok, "effective d_s over n=3..6: " + ", ".join(f"{v:.3f}" for v in pairs))


def test_fractions_are_exact_in_staircase():
    # guards the rational arithmetic used by criterion 10
    check = staircase_identity_check(3, 5)
    assert check.g_cum == Fraction(1, 8) + Fraction(1, 32)
