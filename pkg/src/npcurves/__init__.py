"""Zeta functions, Newton polygons and Ekedahl-Oort combinatorics for curves
over finite fields."""

from .curves import CurveSpec, parse_curve, point_count
from .ffield import Field, FieldElement, make_field
from .npoly import NewtonPolygon, newton_polygon
from .zeta import LPolynomial, l_polynomial

__version__ = "0.1.0"

__all__ = [
    "CurveSpec",
    "Field",
    "FieldElement",
    "LPolynomial",
    "NewtonPolygon",
    "l_polynomial",
    "make_field",
    "newton_polygon",
    "parse_curve",
    "point_count",
]
