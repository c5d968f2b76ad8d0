"""Deterministic simplicial complexes: growth, exact counts, degree censuses and spectra."""

from .complex import Complex, Model, Simplex, build, diameter, fvector_of, grow, grow_constrained, new_complex, skeleton
from .counting import (
    CountTable,
    asymptotic_estimate,
    codiagonal,
    fvector_constrained,
    fvector_recursive,
    log_numbers,
    max_degree_gap,
    n0_closed,
    nd_by_series,
    total_simplices,
)
from .growth import GrowthRate, g_plus, g_plus_fit_ratio
from .polynomial import IntPolynomial
from .series import RationalSeries

__all__ = [
    "Complex", "Model", "Simplex", "build", "diameter", "fvector_of", "grow",
    "grow_constrained", "new_complex", "skeleton", "CountTable", "asymptotic_estimate",
    "codiagonal", "fvector_constrained", "fvector_recursive", "log_numbers",
    "max_degree_gap", "n0_closed", "nd_by_series", "total_simplices", "GrowthRate",
    "g_plus", "g_plus_fit_ratio", "IntPolynomial", "RationalSeries",
]
