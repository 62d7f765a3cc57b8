"""Polynomial Koebe problem: extremal polynomials, minimum modulus, univalence."""

from .chebyshev import c_param, cheb_u, cheb_u_prime
from .circle import MinModResult, boundary_curve, min_modulus, mu_functional
from .cubic import (
    CubicPoint,
    GammaSegment,
    TypeTag,
    classify_type,
    critical_x0,
    extremal_scan,
    gamma_infimum,
    gamma_point,
    in_univalence_region,
    min_modulus_closed_form,
    phi_quadratic,
    tilde_a3,
)
from .polyfamily import (
    FamilyKind,
    RealPolynomial,
    conjectured_radius,
    evaluate,
    koebe_eval,
    pn_coeffs,
    reflect,
    suffridge_coeffs,
    suffridge_minus_one,
)
from .univalence import UnivalenceReport, Verdict, check_univalent, escalate_radius

__version__ = "0.1.0"
