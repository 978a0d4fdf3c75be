"""Exact field and polynomial arithmetic."""

from .fields import GF, QQ, ModP, PrimeField, Rationals, multiplicative_order, parse_field
from .mpoly import XY, XYZ, Poly, parse_poly, poly_from_map
from .reduction import reduce_mod_surface, series_surface_residual
from .series import TruncatedSeries, series_exp_log
from .upoly import (
    LaurentPoly,
    RootReport,
    UniPoly,
    nth_roots,
    poly_gcd,
    roots_in_field,
    roots_of_unity,
    series_inverse,
)

__all__ = [
    "GF", "QQ", "ModP", "PrimeField", "Rationals", "multiplicative_order", "parse_field",
    "XY", "XYZ", "Poly", "parse_poly", "poly_from_map",
    "reduce_mod_surface", "series_surface_residual",
    "TruncatedSeries", "series_exp_log",
    "LaurentPoly", "RootReport", "UniPoly", "nth_roots", "poly_gcd", "roots_in_field",
    "roots_of_unity", "series_inverse",
]
