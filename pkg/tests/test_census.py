from __future__ import annotations

import math
from fractions import Fraction

import pytest

from dscx import goldens
from dscx.census import (
    DegreeCensus,
    census,
    codim2_census,
    cumulative_distribution,
    distinct_degrees,
    dsc1_degree_distribution,
    dsc1_distinct_1degrees,
    dsc1_gamma,
    dsc2_one_degree_distribution,
    dsc2_vertex_degree_census,
    dsc3_two_degree_distribution,
    gamma_404,
    gamma_405_curve,
    gamma_endpoint,
    mean_upper_degree,
    verify_degree_conjectures,
)
from dscx.complex import build
from dscx.counting import fvector_recursive
from dscx.errors import DomainError


@pytest.mark.parametrize("key", sorted(k for k in goldens.CENSUS if k[1] <= 6))
def test_census_goldens(key):
    d, n = key
    assert census(build(n), d).as_lists() == [list(e) for e in goldens.CENSUS[key]]


@pytest.mark.parametrize("key", sorted(goldens.DISTINCT_DEGREES))
def test_distinct_degree_goldens(key):
    d, n = key
    assert distinct_degrees(build(n), d) == goldens.DISTINCT_DEGREES[key]


def test_census_mass_and_json_round_trip():
    cen = census(build(5), 1)
    assert cen.total == fvector_recursive(5)[1]
    assert cen.degree_sum == 3 * fvector_recursive(5)[2]
    assert DegreeCensus.from_json(cen.to_json()) == cen
    cum = cumulative_distribution(cen)
    assert cum[0][1] == 1 and all(a[1] > b[1] for a, b in zip(cum, cum[1:]))


def test_mean_degree_is_rational():
    assert mean_upper_degree(4, 0) == Fraction(2 * 116, 65)


def test_conjecture_suite_small():
    rep = verify_degree_conjectures(6)
    assert rep.passed, rep.failures


def test_tree_model_closed_forms():
    cen = dsc1_degree_distribution(5)
    assert cen == census(build(5, "dsc1"), 0)
    assert dsc1_gamma() == pytest.approx(goldens.DSC1_GAMMA, abs=1e-3)


@pytest.mark.parametrize("n", range(1, 7))
def test_dsc2_vertex_census_matches_enumeration(n):
    assert dsc2_vertex_degree_census(n) == census(build(n, "dsc2"), 0)


def test_dsc2_goldens():
    for n, entries in goldens.DSC2_VERTEX_DEGREE_CENSUS.items():
        assert list(dsc2_vertex_degree_census(n).entries) == entries
    for n, entries in goldens.DSC2_ONE_DEGREE_CENSUS.items():
        assert list(dsc2_one_degree_distribution(n).entries) == entries
    for n, ks in goldens.DSC2_DISTINCT_VERTEX_DEGREES.items():
        assert dsc1_distinct_1degrees(n) == ks
        assert distinct_degrees(build(n, "dsc2"), 0) == ks


@pytest.mark.parametrize("n", range(3, 8))
def test_constrained_census_closed_forms(n):
    assert dsc2_one_degree_distribution(n) == census(build(n, "dsc2"), 1)
    assert dsc3_two_degree_distribution(n) == census(build(n, "dsc3"), 2)


def test_codim2_census_counts():
    for n in range(3, 8):
        assert codim2_census(n) == census(build(n), n - 2).as_lists()


def test_endpoint_routes_agree():
    for n in range(4, 8):
        a = gamma_endpoint(n, route="exact").gamma
        b = gamma_endpoint(n, route="census").gamma
        assert a == pytest.approx(b, abs=1e-12)


def test_closed_form_exponent_tends_to_two():
    vals = [gamma_404(n).gamma for n in (10, 100, 10**4)]
    assert vals == sorted(vals, reverse=True) and vals[-1] - 2 < 1e-3
    with pytest.raises(DomainError):
        gamma_404(1)


def test_fixed_ratio_curves():
    deltas = [0.1, 0.2, 0.3, 0.4, 0.5]
    curves = {n: [g for _, g in gamma_405_curve(n, deltas)] for n in (70, 200, 10_000)}
    for ys in curves.values():
        assert ys == sorted(ys)
    for i in range(len(deltas)):
        assert curves[70][i] > curves[200][i] > curves[10_000][i] > 2.0
    assert math.isfinite(curves[10_000][0])
