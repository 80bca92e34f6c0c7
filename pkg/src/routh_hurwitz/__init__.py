"""Exact root-distribution analysis of polynomials relative to the imaginary axis."""
from .scalar_poly import ComplexPolynomial, Polynomial, RationalFunction
from .sturm_index import RootDistribution, half_plane_split
from .routh import classify, is_stable, routh_array
from .crosscheck import crosscheck

__all__ = [
    "ComplexPolynomial",
    "Polynomial",
    "RationalFunction",
    "RootDistribution",
    "classify",
    "crosscheck",
    "half_plane_split",
    "is_stable",
    "routh_array",
]
