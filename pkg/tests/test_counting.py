from __future__ import annotations

import math

import pytest

from dscx import goldens
from dscx.counting import (
    CountTable,
    asymptotic_estimate,
    codiagonal,
    fvector_constrained,
    fvector_recursive,
    log_numbers,
    max_degree_gap,
    n0_closed,
    nd_by_series,
    total_egf,
    total_simplices,
)
from dscx.errors import UnsupportedOrder


def test_recursion_reproduces_goldens():
    for n, f in goldens.FVECTORS.items():
        assert fvector_recursive(n) == f


def test_vertex_closed_form_and_total():
    for n in range(25):
        f = fvector_recursive(n)
        assert f[0] == n0_closed(n)
        assert sum(f) == total_simplices(n)


def test_large_generation_is_fast_and_exact():
    f = fvector_recursive(100)
    assert f[0] == n0_closed(100)
    assert f[-1] == 1 and f[-2] == codiagonal(100, 1)


def test_series_equals_recursion():
    for n in range(13):
        f = fvector_recursive(n)
        assert [nd_by_series(d, n) for d in range(n + 1)] == f


def test_total_egf_coefficients():
    s = total_egf(13)
    assert [s.egf_coefficient(n) for n in range(13)] == [total_simplices(n) for n in range(13)]


def test_codiagonal():
    assert [codiagonal(9, p) for p in range(6)] == [1, 54, 1230, 15456, 117579, 558642]
    with pytest.raises(UnsupportedOrder):
        codiagonal(9, 6)


def test_logarithmic_numbers():
    assert [log_numbers(n) for n in range(1, 9)] == goldens.LOGARITHMIC_NUMBERS
    assert [max_degree_gap(n) for n in (2, 3, 4, 5, 6, 8)] == [1, 2, 5, 16, 65, 1957]


def test_constrained_counts():
    assert fvector_constrained(5, 1) == [32, 31]
    assert fvector_constrained(6, 2) == [625, 1000, 376]
    assert fvector_constrained(4, 50) == fvector_recursive(4)


def test_asymptotics_converge():
    n = 9
    exact = fvector_recursive(n)[0]
    assert math.exp(asymptotic_estimate("N0", n)) / exact == pytest.approx(1.0, rel=1e-5)
    ratios = [log_numbers(n) / math.exp(asymptotic_estimate("M0", n)) for n in (8, 20, 60)]
    assert ratios[0] > ratios[1] > ratios[2] > 1.0
    assert ratios[2] < 1.02


def test_count_table_csv():
    t = CountTable("dsc(2)")
    assert t.get(1, 6) == 1000
    assert t.to_csv([2]).splitlines() == ["model,n,d,N_d", "dsc(2),2,0,5", "dsc(2),2,1,5", "dsc(2),2,2,1"]


def test_codimension_asymptotic_within_band():
    est = math.exp(asymptotic_estimate("Nnm", 9, 2))
    assert est == pytest.approx(9**4 / 8)
    assert abs(est / fvector_recursive(9)[7] - 1) <= 0.35
