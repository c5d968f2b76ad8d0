from __future__ import annotations

from fractions import Fraction

import pytest

from dscx import goldens
from dscx.charpoly import (
    PI_DIGESTS,
    adjacency_charpoly,
    adjacency_coeff_check,
    adjacency_residual_check,
    dsc1_spectrum,
    evaluate_pi,
    laplacian_charpoly_bundle,
    laplacian_residual_check,
    laplacian_root_count_check,
    lambda2_exact,
    matching_polynomial_check,
    omega,
    pi_coeff_check,
    pi_digest,
    staircase_identity_check,
)
from dscx.errors import ResourceGuardError
from dscx.polynomial import IntPolynomial


@pytest.fixture(scope="module")
def bundle():
    return laplacian_charpoly_bundle(9)


def test_adjacency_factors(bundle):
    for n, (a, b) in goldens.ADJACENCY_FACTORS.items():
        assert adjacency_charpoly(n) == IntPolynomial(a) * IntPolynomial(b)


@pytest.mark.parametrize("n", range(1, 10))
def test_adjacency_even_with_degree_law(n):
    u = adjacency_charpoly(n)
    assert u.reflect() == u
    assert u.degree == 2**n
    assert u[0] == (-1 if n == 1 else 1)


@pytest.mark.parametrize("n", range(4, 10))
def test_adjacency_coefficient_formulas(n):
    assert adjacency_coeff_check(n).passed


def test_omega_factorises_adjacency():
    for n in range(2, 7):
        w = omega(n)
        assert w * w.reflect() == adjacency_charpoly(n) or w * w.reflect() == -adjacency_charpoly(n)


def test_laplacian_factors(bundle):
    for i, coeffs in goldens.PI_FACTORS.items():
        assert list(bundle.factor(i).coeffs) == coeffs
    assert len(goldens.PI_FACTORS[7]) == 65
    for i in (8, 9):
        assert pi_digest(bundle.factor(i)) == PI_DIGESTS[i]
    for i in range(1, 10):
        assert bundle.factor(i)[0] == 2
        assert bundle.factor(i).degree == 2 ** (i - 1)


@pytest.mark.parametrize("n", range(3, 10))
def test_laplacian_coefficient_formulas(n, bundle):
    assert pi_coeff_check(n, bundle).passed


def test_export_format(bundle):
    assert bundle.export_lines()[1] == "pi 2 : 2 -4 1"


def test_point_evaluation_matches_coefficients(bundle):
    for i in range(1, 8):
        for x in (Fraction(0), Fraction(1), Fraction(1, 3), Fraction(7, 2)):
            assert evaluate_pi(i, x) == bundle.factor(i)(x)


def test_coefficient_guard():
    with pytest.raises(ResourceGuardError):
        laplacian_charpoly_bundle(15)


@pytest.mark.parametrize("n", range(2, 9))
def test_root_counts_and_residuals(n):
    rep = dsc1_spectrum(n)
    assert laplacian_root_count_check(n, rep).passed
    assert laplacian_residual_check(n, rep) < 1e-8
    assert adjacency_residual_check(n) < 1e-8


@pytest.mark.parametrize("n", range(2, 13))
def test_bisection_agrees_with_eigensolver(n):
    assert lambda2_exact(n).value == pytest.approx(dsc1_spectrum(n).lambda2, rel=1e-8)


def test_lambda2_large_generation_uses_point_values():
    r = lambda2_exact(20, rel_tol=1e-7)
    assert r.scaled == pytest.approx(goldens.LAMBDA2_SCALED_LIMIT, abs=1e-3)


def test_staircase_identity_small():
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert staircase_identity_check(k, n).passed


def test_matching_polynomial_oracle():
    assert all(matching_polynomial_check(n) for n in range(1, 5))
