from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from dscx.complex import build
from dscx.errors import ContractViolation, ResourceGuardError
from dscx.hodge import (
    betti,
    betti_exact,
    boundary_composition_is_zero,
    complex_spectrum,
    cumulative_spectral_density,
    exact_rank,
    hodge_laplacian,
    hodge_matching_check,
    incidence,
    lambda2_point,
    lambda2_trajectory,
    spectral_dimension_estimate,
    spectrum,
    spectrum_csv,
    staircase_csv,
)

CASES = [(None, n) for n in range(1, 5)] + [("dsc2", n) for n in range(1, 6)]


def test_incidence_signs_for_a_triangle():
    c = build(2)
    b2 = incidence(c, 2).to_dense()
    # columns of B^(2): facets (1,2), (0,2), (0,1) with signs +, -, +
    rows = {c.simplices(1)[i]: int(b2[i, 0]) for i in range(b2.shape[0]) if b2[i, 0]}
    assert rows == {(1, 2): 1, (0, 2): -1, (0, 1): 1}


@pytest.mark.parametrize("model,n", CASES)
def test_boundary_of_boundary_vanishes(model, n):
    c = build(n, model)
    for d in range(1, c.max_dim):
        assert boundary_composition_is_zero(c, d)


@pytest.mark.parametrize("model,n", CASES)
def test_trace_and_psd(model, n):
    c = build(n, model)
    f = c.fvector() + [0]
    for d in range(c.max_dim + 1):
        lap = hodge_laplacian(c, d)
        down = (d + 1) * f[d] if d >= 1 else 0
        assert int(lap.diagonal().sum()) == down + (d + 2) * f[d + 1]
        rep = complex_spectrum(c, d)
        assert float(rep.eigenvalues.sum()) == pytest.approx(down + (d + 2) * f[d + 1], rel=1e-9)
        assert rep.eigenvalues[0] >= -rep.tol_zero


@pytest.mark.parametrize("model,n", CASES)
def test_betti_pattern(model, n):
    c = build(n, model)
    assert [betti(c, d) for d in range(c.max_dim + 1)] == [1] + [0] * c.max_dim


def test_exact_rank_agrees_with_spectrum():
    c = build(3)
    assert [betti_exact(c, d) for d in range(4)] == [1, 0, 0, 0]
    assert exact_rank(np.array([[2, 4], [1, 2]])) == 1


@pytest.mark.parametrize("model,n", CASES)
def test_hodge_matching(model, n):
    c = build(n, model)
    for d in range(c.max_dim):
        assert hodge_matching_check(c, d).matched


def test_dsc2_gap_equals_edge_minimum():
    for row in lambda2_trajectory("dsc2", range(2, 7)):
        assert row["lambda2"] == pytest.approx(row["lambda1_1"], rel=1e-8)


def test_spectrum_contract_and_guard():
    with pytest.raises(ContractViolation):
        spectrum(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ResourceGuardError):
        spectrum(np.eye(20), max_size=10)


def test_staircase_is_exact_fraction():
    rep = complex_spectrum(build(3), 0)
    stair = cumulative_spectral_density(rep)
    assert stair[0] == (0.0, Fraction(1, 16))
    assert stair[-1][1] == 1
    assert "g_cum_num" in staircase_csv([rep]).splitlines()[0]
    assert len(spectrum_csv([rep]).splitlines()) == 17


def test_spectral_dimension_from_exact_scaling():
    reports = [lambda2_point(n, 2**n, 2.0**-n) for n in range(5, 9)]
    est = spectral_dimension_estimate(reports)
    assert est.fit == pytest.approx(2.0)
    assert all(ds == pytest.approx(2.0) for _, _, ds in est.pairwise)
