"""Stray-charge potentials and fields along the cavity axis.

A positive test charge q near the origin interacts with stationary charges
Q1, Q2 placed at -x_Q and +x_Q:

    U(x) = s_q (Q1/|x + x_Q| + Q2/|x - x_Q|),   s_q = q/(4 pi eps0)

Restricted to |x| < x_Q and expanded to second order,

    U(x) ~ s_q (A x + B x^2 + C),
    A = (Q2 - Q1)/x_Q^2,  B = (Q1 + Q2)/x_Q^3,  C = (Q1 + Q2)/x_Q

and the axial field is E(x) = -(1/q) dU/dx = -(A + 2 B x)/(4 pi eps0).
The constant C never enters an observable; it is carried for completeness.

Two companion models gauge how literally the point-charge picture should
be taken: a pair of infinite charged sheets (uniform field
(sigma2 - sigma1)/(2 eps0)) and a uniformly charged finite disc of radius
r, whose on-axis potential is

    U_disc(x) = 2 s_q Q (sqrt(r^2 + x^2) - x)/r^2.

For a 125 um disc seen from 200 um the disc/point ratios are
U_m/U_p = 0.92 and E_m/E_p = 0.78, close enough to unity that the
point-charge model is used for the budgets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError
from .quantities import CODATA

__all__ = [
    "ChargeScenario",
    "ExpansionCoefficients",
    "expansion_coefficients",
    "potential_exact",
    "potential_quadratic",
    "field_at",
    "sheet_pair_field",
    "disc_point_ratios",
    "single_charge_field",
    "charge_for_field",
]


@dataclass(frozen=True)
class ChargeScenario:
    """Stray charges q1 at -x_Q and q2 at +x_Q, in elementary charges."""

    q1_e: float
    q2_e: float
    x_q_m: float
    test_charge_e: float = 1.0

    def __post_init__(self) -> None:
        if self.x_q_m <= 0:
            raise ParameterError(f"x_Q must be positive, got {self.x_q_m}")


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Second-order expansion U = s_q (A x + B x^2 + C), SI units."""

    A: float        # C/m^2
    B: float        # C/m^3
    C_const: float  # C/m
    s_q: float      # q/(4 pi eps0), V*m
    x_q_m: float


def expansion_coefficients(s: ChargeScenario) -> ExpansionCoefficients:
    q1 = s.q1_e * CODATA.e
    q2 = s.q2_e * CODATA.e
    return ExpansionCoefficients(
        A=(q2 - q1) / s.x_q_m**2,
        B=(q1 + q2) / s.x_q_m**3,
        C_const=(q1 + q2) / s.x_q_m,
        s_q=s.test_charge_e * CODATA.e * CODATA.k_e,
        x_q_m=s.x_q_m,
    )


def _check_domain(x_m: float, x_q_m: float) -> None:
    if abs(x_m) >= x_q_m:
        raise DomainError(
            f"|x| = {abs(x_m)} m is outside the model domain |x| < {x_q_m} m"
        )


def potential_exact(s: ChargeScenario, x_m: float) -> float:
    """Exact two-point-charge interaction energy (J) for |x| < x_Q."""
    _check_domain(x_m, s.x_q_m)
    s_q = s.test_charge_e * CODATA.e * CODATA.k_e
    q1 = s.q1_e * CODATA.e
    q2 = s.q2_e * CODATA.e
    return s_q * (q1 / abs(x_m + s.x_q_m) + q2 / abs(x_m - s.x_q_m))


def potential_quadratic(coeffs: ExpansionCoefficients, x_m: float) -> float:
    """Second-order interaction energy s_q (A x + B x^2 + C), in J."""
    _check_domain(x_m, coeffs.x_q_m)
    return coeffs.s_q * (coeffs.A * x_m + coeffs.B * x_m**2 + coeffs.C_const)


def field_at(s: ChargeScenario, x_m: float) -> float:
    """Axial stray field E(x) = -(A + 2Bx)/(4 pi eps0), in V/m."""
    _check_domain(x_m, s.x_q_m)
    c = expansion_coefficients(s)
    return -(c.A + 2.0 * c.B * x_m) * CODATA.k_e


def sheet_pair_field(sigma1: float, sigma2: float) -> float:
    """Uniform axial field (sigma2 - sigma1)/(2 eps0) between two sheets."""
    return (sigma2 - sigma1) / (2.0 * CODATA.eps0)


def disc_point_ratios(radius_m: float, distance_m: float) -> dict:
    """Potential and field ratios of a uniformly charged disc vs a point.

    u_ratio = U_disc/U_point = 2 x (sqrt(r^2+x^2) - x)/r^2
    e_ratio = E_disc/E_point = 2 x^2 (1 - x/sqrt(r^2+x^2))/r^2

    Both tend to 1 as r -> 0 or x >> r. Evaluated in cancellation-free form.
    """
    if radius_m <= 0 or distance_m <= 0:
        raise ParameterError("radius and distance must be positive")
    r, x = radius_m, distance_m
    hyp = math.hypot(r, x)
    # sqrt(r^2+x^2) - x = r^2/(hyp + x) avoids cancellation for r << x
    u_ratio = 2.0 * x / (hyp + x)
    e_ratio = 2.0 * x**2 / (hyp * (hyp + x))
    return {"u_ratio": u_ratio, "e_ratio": e_ratio}


def single_charge_field(q1_e: float, x_q_m: float) -> float:
    """Field at the origin from a single charge q1 at distance x_Q (V/m)."""
    if x_q_m <= 0:
        raise ParameterError(f"x_Q must be positive, got {x_q_m}")
    return CODATA.k_e * q1_e * CODATA.e / x_q_m**2


def charge_for_field(field_v_per_m: float, x_q_m: float) -> float:
    """Charge (in e) at distance x_Q that produces a given field at origin."""
    if x_q_m <= 0:
        raise ParameterError(f"x_Q must be positive, got {x_q_m}")
    return field_v_per_m * x_q_m**2 / (CODATA.k_e * CODATA.e)
