"""Exact continued fractions of sqrt(f) for quartics over quadratic fields, and
the torsion orders of the matching elliptic curves."""

from .qfield import QuadElem, parse_elem, qf_sqrt, enumerate_elements, enumerate_rationals
from .polyring import Poly, poly_gcd, is_squarefree
from .cfrac import CFExpansion, expand_sqrt, scaled_expand, quasi_period, period, convergents
from .ecurve import (
    TateCurve,
    ShortWeierstrass,
    QuarticModel,
    tate_to_short,
    point_order,
    quartic_from_point,
    jacobian_of_quartic,
    infinity_order,
)
from .modcurve import ModCurvePoint, solve_points
from .families import FamilySpec, family_quartic, family_k, alpha_poly, odd_period_certificate

__version__ = "0.1.0"
