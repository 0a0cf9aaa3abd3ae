"""Exact arithmetic toolkit for a Pinchuk map F = (P, Q) of the plane.

Everything is computed over the rationals with ``fractions.Fraction``:
construction of the map, its Jacobian identity, the degree-6 relation of h
over Q(P, Q), level sets, the asymptotic variety and exact fibers.
"""

from .avariety import classify_point, implicit_poly, param_asymptotic, singular_points
from .fibers import fiber, tau
from .fieldext import derive_R, minimal_polynomial
from .levelset import asymptotic_values, param_level, poles
from .pinchuk import build_core, build_family, recover_S, verify_jacobian_identity, verify_positivity
from .qpoly import MPoly, UniPoly

__version__ = "0.1.0"

__all__ = [
    "MPoly", "UniPoly",
    "build_core", "build_family", "recover_S", "verify_jacobian_identity", "verify_positivity",
    "derive_R", "minimal_polynomial",
    "param_level", "poles", "asymptotic_values",
    "implicit_poly", "param_asymptotic", "classify_point", "singular_points",
    "fiber", "tau",
]
