"""Trapped-ion consequences of stray charge on nearby mirror surfaces.

The ion sits in a harmonic pseudopotential U_t = k_t x^2 with
k_t = (1/2) m omega_x^2. Adding the quadratic stray-charge expansion
U_Q = s_q (A x + B x^2 + C) shifts the equilibrium and the secular
frequency:

    x~       = -(1/2) s_q A / (k_t + s_q B)
    omega~_x = sqrt(2 (k_t + s_q B) / m)

An ion displaced from the RF null by x~ acquires excess micromotion of
amplitude x_um = sqrt(2) (omega~_x / Omega_RF) x~. In the ion frame the
cooling laser is phase modulated at Omega_RF with index
beta = 2 pi x_um / lambda_D, leaving a carrier intensity J0(beta)^2; a
below-saturation scattering (hence Doppler cooling) rate scales by the
same factor. Laser-driven gates additionally require the Lamb-Dicke
condition k x_um << 1 and a small secular-frequency error
delta_x = |omega_x - omega~_x| against the two-qubit Rabi rate.

Budget helpers invert these monotone chains by bisection to find the
largest tolerable stray charge (q2 = 0 convention, charges in units of e).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .electrostatics import ChargeScenario, expansion_coefficients, field_at
from .errors import ParameterError, SearchError, StabilityError
from .quantities import CODATA

__all__ = [
    "TrapConfig",
    "GateParams",
    "CoolingBudget",
    "LambDickeBudget",
    "GateDetuning",
    "equilibrium_position",
    "shifted_frequency",
    "micromotion_amplitude",
    "bessel_j0",
    "BESSEL_J0_FIRST_ZERO",
    "carrier_intensity_factor",
    "micromotion_of_single_charge",
    "max_charge_for_cooling",
    "lamb_dicke_budget",
    "charge_for_displacement",
    "zero_point_spread",
    "gate_detuning_verdict",
    "max_equal_charge_for_gate",
]

#: Upper end of all charge searches, in elementary charges.
CHARGE_SEARCH_MAX_E = 1e9

#: First positive zero of J0.
BESSEL_J0_FIRST_ZERO = 2.404825557695773


@dataclass(frozen=True)
class TrapConfig:
    """Paul-trap and laser parameters; constructor units are amu and Hz."""

    mass_amu: float
    secular_hz: float
    rf_hz: float
    cooling_wavelength_m: float
    gate_wavelength_m: float
    cavity_wavelength_m: float

    def __post_init__(self) -> None:
        fields = (
            self.mass_amu,
            self.secular_hz,
            self.rf_hz,
            self.cooling_wavelength_m,
            self.gate_wavelength_m,
            self.cavity_wavelength_m,
        )
        if any(v <= 0 for v in fields):
            raise ParameterError("all trap parameters must be positive")
        if self.rf_hz <= self.secular_hz:
            raise ParameterError(
                f"RF drive ({self.rf_hz} Hz) must exceed the secular "
                f"frequency ({self.secular_hz} Hz)"
            )

    @property
    def mass_kg(self) -> float:
        return self.mass_amu * CODATA.amu

    @property
    def omega_x(self) -> float:
        """Secular angular frequency, rad/s."""
        return 2.0 * math.pi * self.secular_hz

    @property
    def omega_rf(self) -> float:
        """RF drive angular frequency, rad/s."""
        return 2.0 * math.pi * self.rf_hz

    @property
    def k_t(self) -> float:
        """Harmonic-potential coefficient (1/2) m omega_x^2, J/m^2."""
        return 0.5 * self.mass_kg * self.omega_x**2


@dataclass(frozen=True)
class GateParams:
    """Two-qubit gate parameters; only the threshold rule is computed here.

    The occupation and initial spin state are recorded for provenance; the
    underlying fidelity curve lives in the cited gate literature.
    """

    rabi_hz: float
    occupation: int = 50
    threshold_ratio: float = 0.013
    initial_spins: str = "down-down"

    def __post_init__(self) -> None:
        if self.rabi_hz <= 0:
            raise ParameterError(f"Rabi rate must be positive, got {self.rabi_hz}")
        if self.threshold_ratio <= 0:
            raise ParameterError("threshold ratio must be positive")

    @property
    def omega_2g(self) -> float:
        return 2.0 * math.pi * self.rabi_hz


@dataclass(frozen=True)
class CoolingBudget:
    q1_e: float
    field_v_per_m: float
    x_tilde_m: float


@dataclass(frozen=True)
class LambDickeBudget:
    x_tilde_max_m: float
    x_micromotion_max_m: float
    q1_max_e: float
    field_v_per_m: float


@dataclass(frozen=True)
class GateDetuning:
    delta_x_rad_s: float
    ratio_rabi: float      # delta_x / Omega_2g
    ratio_secular: float   # delta_x / omega_x
    within_threshold: bool


def _stiffness(trap: TrapConfig, s: ChargeScenario) -> float:
    """k_t + s_q B, raising StabilityError when the well opens up."""
    c = expansion_coefficients(s)
    k_eff = trap.k_t + c.s_q * c.B
    if k_eff <= 0:
        raise StabilityError(
            f"stray charge cancels the trap curvature (k_t + s_q B = {k_eff:.3e})"
        )
    return k_eff


def equilibrium_position(trap: TrapConfig, s: ChargeScenario) -> float:
    """Displaced equilibrium x~ = -(1/2) s_q A / (k_t + s_q B), in m."""
    c = expansion_coefficients(s)
    return -0.5 * c.s_q * c.A / _stiffness(trap, s)


def shifted_frequency(trap: TrapConfig, s: ChargeScenario) -> float:
    """Perturbed secular frequency sqrt(2 (k_t + s_q B)/m), rad/s."""
    return math.sqrt(2.0 * _stiffness(trap, s) / trap.mass_kg)


def micromotion_amplitude(
    trap: TrapConfig, x_tilde_m: float, omega_tilde: float
) -> float:
    """Excess micromotion sqrt(2) (omega~_x / Omega_RF) x~, in m."""
    if trap.omega_rf <= 0:
        raise ParameterError("RF frequency must be positive")
    return math.sqrt(2.0) * (omega_tilde / trap.omega_rf) * x_tilde_m


# ---------------------------------------------------------------------------
# Bessel J0: power series below |x| = 8, Hankel asymptotic form beyond.
# The asymptotic branch uses rational minimax coefficients in z = 25/x^2
# (Cephes-style, public domain); absolute error < 1e-10 over |x| <= 20.

_SQ2OPI = 0.79788456080286535588  # sqrt(2/pi)
_PIO4 = 0.78539816339744830962

_PP = (
    7.96936729297347051624e-4,
    8.28352392107440799803e-2,
    1.23953371646414299388e0,
    5.44725003058768775090e0,
    8.74716500199817011941e0,
    5.30324038235394892183e0,
    9.99999999999999997821e-1,
)
_PQ = (
    9.24408810558863637013e-4,
    8.56288474354474431428e-2,
    1.25352743901058953537e0,
    5.47097740330417105182e0,
    8.76190883237069594232e0,
    5.30605288235394617618e0,
    1.00000000000000000218e0,
)
_QP = (
    -1.13663838898469149931e-2,
    -1.28252718670509318512e0,
    -1.95539544257735972385e1,
    -9.32060152123768231369e1,
    -1.77681167980488050595e2,
    -1.47077505154951170175e2,
    -5.14105326766599330220e1,
    -6.05014350600728481186e0,
)
_QQ = (  # monic: leading x^7 coefficient is 1
    6.43178256118178023184e1,
    8.56430025976980587198e2,
    3.88240183605401609683e3,
    7.24046774195652478189e3,
    5.93072701187316984827e3,
    2.06209331660327847417e3,
    2.42005740240291393179e2,
)


def _polevl(x: float, coef) -> float:
    ans = coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _p1evl(x: float, coef) -> float:
    ans = x + coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def bessel_j0(x: float) -> float:
    """Bessel function of the first kind, order zero.

    J0 is even; computed from the defining power series
    sum_k (-1)^k (x^2/4)^k / (k!)^2 for |x| < 8 and from the Hankel
    asymptotic form sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4))
    beyond.
    """
    x = abs(float(x))
    if not math.isfinite(x):
        raise ParameterError(f"argument must be finite, got {x}")
    if x < 8.0:
        z = 0.25 * x * x
        term = 1.0
        total = 1.0
        for k in range(1, 200):
            term *= -z / (k * k)
            total += term
            if abs(term) <= 1e-17 * abs(total) + 1e-300:
                break
        return total
    w = 5.0 / x
    z = w * w
    p = _polevl(z, _PP) / _polevl(z, _PQ)
    q = _polevl(z, _QP) / _p1evl(z, _QQ)
    xn = x - _PIO4
    return _SQ2OPI * (p * math.cos(xn) - w * q * math.sin(xn)) / math.sqrt(x)


def carrier_intensity_factor(x_micromotion_m: float, cooling_wavelength_m: float) -> float:
    """Carrier intensity reduction J0(beta)^2, beta = 2 pi x_um / lambda_D."""
    if cooling_wavelength_m <= 0:
        raise ParameterError("wavelength must be positive")
    beta = 2.0 * math.pi * x_micromotion_m / cooling_wavelength_m
    return bessel_j0(beta) ** 2


def micromotion_of_single_charge(trap: TrapConfig, x_q_m: float, q1_e: float) -> float:
    """Micromotion amplitude for a single charge q1 at x_Q (q2 = 0)."""
    if q1_e == 0.0:
        return 0.0
    s = ChargeScenario(q1_e, 0.0, x_q_m)
    x_t = equilibrium_position(trap, s)
    return micromotion_amplitude(trap, x_t, shifted_frequency(trap, s))


def _bisect_increasing(f, target: float, lo: float, hi: float, rtol: float = 1e-6):
    """Solve f(q) = target for increasing f on [lo, hi]."""
    f_lo, f_hi = f(lo), f(hi)
    if target <= f_lo:
        return lo
    if target > f_hi:
        raise SearchError(
            f"target {target:.6g} not reachable on [{lo:.6g}, {hi:.6g}] "
            f"(f spans [{f_lo:.6g}, {f_hi:.6g}])"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rtol * max(abs(hi), 1e-30):
            break
    return 0.5 * (lo + hi)


def max_charge_for_cooling(
    trap: TrapConfig, x_q_m: float, intensity_floor: float
) -> CoolingBudget:
    """Largest q1 (q2 = 0) keeping the carrier intensity above a floor.

    Bisection on the monotone chain q1 -> x~ -> x_um -> J0^2, restricted to
    modulation indices below the first J0 zero where the factor is
    monotone. Relative tolerance 1e-6 on q1.
    """
    if not 0.0 < intensity_floor < 1.0:
        raise ParameterError(
            f"intensity floor must be in (0,1), got {intensity_floor}"
        )
    x_um_at_first_zero = (
        BESSEL_J0_FIRST_ZERO * trap.cooling_wavelength_m / (2.0 * math.pi)
    )
    x_um = lambda q: micromotion_of_single_charge(trap, x_q_m, q)
    if x_um(CHARGE_SEARCH_MAX_E) < x_um_at_first_zero:
        q_cap = CHARGE_SEARCH_MAX_E
    else:
        q_cap = _bisect_increasing(x_um, x_um_at_first_zero, 0.0, CHARGE_SEARCH_MAX_E)

    def factor_drop(q: float) -> float:
        return 1.0 - carrier_intensity_factor(x_um(q), trap.cooling_wavelength_m)

    if factor_drop(q_cap) < 1.0 - intensity_floor:
        raise SearchError(
            f"carrier factor never falls to {intensity_floor} for "
            f"q1 <= {CHARGE_SEARCH_MAX_E:.0e} e"
        )
    q1 = _bisect_increasing(factor_drop, 1.0 - intensity_floor, 0.0, q_cap)
    s = ChargeScenario(q1, 0.0, x_q_m)
    x_t = equilibrium_position(trap, s)
    return CoolingBudget(q1, field_at(s, x_t), x_t)


def lamb_dicke_budget(
    trap: TrapConfig, x_q_m: float, modulation_limit: float
) -> LambDickeBudget:
    """Charge budget from the gate-laser phase-modulation cap k x_um < limit."""
    if modulation_limit <= 0:
        raise ParameterError("modulation limit must be positive")
    x_um_max = modulation_limit * trap.gate_wavelength_m / (2.0 * math.pi)
    q1 = _bisect_increasing(
        lambda q: micromotion_of_single_charge(trap, x_q_m, q),
        x_um_max,
        0.0,
        CHARGE_SEARCH_MAX_E,
    )
    if q1 == 0.0:
        return LambDickeBudget(0.0, x_um_max, 0.0, 0.0)
    s = ChargeScenario(q1, 0.0, x_q_m)
    x_t = equilibrium_position(trap, s)
    return LambDickeBudget(x_t, x_um_max, q1, field_at(s, x_t))


def charge_for_displacement(trap: TrapConfig, x_q_m: float, x_tilde_m: float) -> float:
    """q1 (q2 = 0) that displaces the equilibrium to x~, closed form.

    Solving x~ = (1/2) u q1 / x_q^2 / (k_t + u q1 / x_q^3) for q1 with
    u = e^2/(4 pi eps0); only displacements below x_q/2 are reachable.
    """
    if not 0.0 <= x_tilde_m < 0.5 * x_q_m:
        raise ParameterError(
            f"displacement {x_tilde_m} m outside the reachable range "
            f"[0, x_q/2 = {0.5 * x_q_m} m)"
        )
    if x_tilde_m == 0.0:
        return 0.0
    u = CODATA.e**2 * CODATA.k_e
    denom = u * (0.5 / x_q_m**2 - x_tilde_m / x_q_m**3)
    return x_tilde_m * trap.k_t / denom


def zero_point_spread(mass_kg: float, omega_x: float) -> float:
    """Ground-state wavepacket size sqrt(hbar/(2 m omega_x)), in m."""
    if mass_kg <= 0 or omega_x <= 0:
        raise ParameterError("mass and frequency must be positive")
    return math.sqrt(CODATA.hbar / (2.0 * mass_kg * omega_x))


def gate_detuning_verdict(
    trap: TrapConfig, s: ChargeScenario, gate: GateParams
) -> GateDetuning:
    """Secular-frequency error against the gate threshold.

    delta_x = |omega_x - omega~_x| is compared to the two-qubit Rabi rate
    (ratio_rabi, thresholded) and to the secular frequency itself
    (ratio_secular, reported for reference).
    """
    delta = abs(trap.omega_x - shifted_frequency(trap, s))
    ratio_rabi = delta / gate.omega_2g
    return GateDetuning(
        delta_x_rad_s=delta,
        ratio_rabi=ratio_rabi,
        ratio_secular=delta / trap.omega_x,
        within_threshold=ratio_rabi < gate.threshold_ratio,
    )


def max_equal_charge_for_gate(
    trap: TrapConfig, x_q_m: float, gate: GateParams
) -> float:
    """Largest q1 = q2 keeping delta_x/Omega_2g below the gate threshold.

    With equal charges A = 0, so delta_x depends only on B: closed-form
    inversion of omega~_x = omega_x sqrt(1 + s_q B / k_t).
    """
    delta_target = gate.threshold_ratio * gate.omega_2g
    s_q_b = trap.k_t * ((1.0 + delta_target / trap.omega_x) ** 2 - 1.0)
    b = s_q_b / (CODATA.e * CODATA.k_e)
    q_total_e = b * x_q_m**3 / CODATA.e
    return 0.5 * q_total_e
