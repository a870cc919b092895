"""Dimensioned values with one-sigma uncertainties and propagation engines.

All measured inputs in this package are carried as an
:class:`UncertainQuantity`: a central value, a symmetric one-standard-
deviation uncertainty, and a coarse dimension tag. Two propagation engines
are provided:

* :func:`propagate_linear` -- first-order (delta-method) propagation with
  central finite-difference derivatives,
  sigma_y = sqrt(sum_i (df/dx_i * sigma_i)^2).
* :func:`propagate_monte_carlo` -- draw independent normal samples per
  input and report the sample mean and standard deviation of f.

Uncertainties are treated as symmetric Gaussian one-sigma throughout;
inputs are assumed uncorrelated. The dimension tags support scaling and
ratios, not full unit algebra: sums require matching tags, a ratio of like
tags is dimensionless, and any other cross-dimension product is rejected.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import constants as _sc

from .errors import DimensionError, EvaluationError, ParameterError

__all__ = [
    "DIMENSIONS",
    "DIMENSIONLESS",
    "UncertainQuantity",
    "Constants",
    "CODATA",
    "as_quantity",
    "propagate_linear",
    "propagate_monte_carlo",
]

DIMENSIONLESS = "dimensionless"

#: Allowed dimension tags. "e" counts elementary charges, "C" coulombs.
DIMENSIONS = frozenset(
    {
        "Hz",
        "m",
        "s",
        "e",
        "C",
        "V/m",
        "J",
        "Ohm",
        "Ohm*m",
        "F",
        "W",
        "eV",
        DIMENSIONLESS,
    }
)


@dataclass(frozen=True)
class UncertainQuantity:
    """A value with a symmetric one-sigma uncertainty and a dimension tag."""

    value: float
    sigma: float = 0.0
    dimension: str = DIMENSIONLESS

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "sigma", float(self.sigma))
        if not math.isfinite(self.value):
            raise ParameterError(f"value must be finite, got {self.value}")
        if not math.isfinite(self.sigma) or self.sigma < 0:
            raise ParameterError(f"sigma must be finite and >= 0, got {self.sigma}")
        if self.dimension not in DIMENSIONS:
            raise DimensionError(
                f"unknown dimension tag {self.dimension!r}; expected one of "
                f"{sorted(DIMENSIONS)}"
            )

    @property
    def relative_sigma(self) -> float:
        return self.sigma / abs(self.value) if self.value != 0 else math.inf

    def _coerce(self, other) -> "UncertainQuantity":
        if isinstance(other, UncertainQuantity):
            return other
        if isinstance(other, (int, float)):
            # bare numbers are exact values in this quantity's dimension
            return UncertainQuantity(float(other), 0.0, self.dimension)
        return NotImplemented

    def __add__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if q.dimension != self.dimension:
            raise DimensionError(
                f"cannot add {self.dimension!r} and {q.dimension!r}"
            )
        return UncertainQuantity(
            self.value + q.value, math.hypot(self.sigma, q.sigma), self.dimension
        )

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if q.dimension != self.dimension:
            raise DimensionError(
                f"cannot subtract {q.dimension!r} from {self.dimension!r}"
            )
        return UncertainQuantity(
            self.value - q.value, math.hypot(self.sigma, q.sigma), self.dimension
        )

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return q - self

    def __neg__(self):
        return UncertainQuantity(-self.value, self.sigma, self.dimension)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return UncertainQuantity(
                self.value * other, self.sigma * abs(other), self.dimension
            )
        if isinstance(other, UncertainQuantity):
            if other.dimension == DIMENSIONLESS:
                dim = self.dimension
            elif self.dimension == DIMENSIONLESS:
                dim = other.dimension
            else:
                raise DimensionError(
                    f"product of {self.dimension!r} and {other.dimension!r} "
                    "is outside the supported tag set"
                )
            value = self.value * other.value
            sigma = math.hypot(self.sigma * other.value, other.sigma * self.value)
            return UncertainQuantity(value, sigma, dim)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        if isinstance(other, UncertainQuantity):
            if other.dimension == self.dimension:
                dim = DIMENSIONLESS
            elif other.dimension == DIMENSIONLESS:
                dim = self.dimension
            else:
                raise DimensionError(
                    f"ratio of {self.dimension!r} to {other.dimension!r} "
                    "is outside the supported tag set"
                )
            value = self.value / other.value
            sigma = abs(value) * math.hypot(
                self.relative_sigma if self.value != 0 else 0.0,
                other.relative_sigma if other.value != 0 else 0.0,
            )
            if self.value == 0:
                sigma = self.sigma / abs(other.value)
            return UncertainQuantity(value, sigma, dim)
        return NotImplemented

    def __rtruediv__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return q / self

    def __str__(self) -> str:
        unit = "" if self.dimension == DIMENSIONLESS else f" {self.dimension}"
        return f"{self.value:g} +/- {self.sigma:g}{unit}"


def as_quantity(x, dimension: str = DIMENSIONLESS) -> UncertainQuantity:
    """Coerce a bare number into an exact UncertainQuantity."""
    if isinstance(x, UncertainQuantity):
        return x
    return UncertainQuantity(float(x), 0.0, dimension)


@dataclass(frozen=True)
class Constants:
    """CODATA values used throughout; immutable by construction.

    k_e = 1/(4 pi eps0) is the Coulomb constant; s_q factors used by the
    electrostatics module are test_charge * k_e.
    """

    e: float = _sc.e                      # elementary charge, C
    eps0: float = _sc.epsilon_0           # vacuum permittivity, F/m
    hbar: float = _sc.hbar                # reduced Planck constant, J*s
    h: float = _sc.h                      # Planck constant, J*s
    c: float = _sc.c                      # speed of light, m/s
    amu: float = _sc.physical_constants["atomic mass constant"][0]  # kg
    k_e: float = 1.0 / (4.0 * math.pi * _sc.epsilon_0)  # N*m^2/C^2


CODATA = Constants()

# finite-difference step rule: relative 1e-6 with an absolute floor
_FD_REL_STEP = 1e-6
_FD_ABS_STEP = 1e-12


def _check_finite(y: float, context: str) -> float:
    y = float(y)
    if not math.isfinite(y):
        raise EvaluationError(f"non-finite function value during {context}: {y}")
    return y


def propagate_linear(
    f: Callable[..., float],
    inputs: Sequence[UncertainQuantity],
    dimension: str = DIMENSIONLESS,
) -> UncertainQuantity:
    """First-order uncertainty propagation through a scalar function.

    Derivatives are central finite differences with step
    max(1e-6*|x_i|, 1e-12). Valid when f is smooth at the input values and
    the sigmas are small against the local curvature scale.
    """
    values = [q.value for q in inputs]
    y0 = _check_finite(f(*values), "propagate_linear evaluation")
    var = 0.0
    for i, q in enumerate(inputs):
        if q.sigma == 0.0:
            continue
        step = max(_FD_REL_STEP * abs(values[i]), _FD_ABS_STEP)
        hi = list(values)
        lo = list(values)
        hi[i] += step
        lo[i] -= step
        deriv = (
            _check_finite(f(*hi), "propagate_linear stencil")
            - _check_finite(f(*lo), "propagate_linear stencil")
        ) / (2.0 * step)
        var += (deriv * q.sigma) ** 2
    return UncertainQuantity(y0, math.sqrt(var), dimension)


def propagate_monte_carlo(
    f: Callable[..., float],
    inputs: Sequence[UncertainQuantity],
    sample_count: int = 100_000,
    seed: int = 0,
    dimension: str = DIMENSIONLESS,
) -> UncertainQuantity:
    """Monte-Carlo uncertainty propagation with an explicit seed.

    Draws independent normal samples for each input and returns the sample
    mean and standard deviation of f. Repeated calls with the same seed are
    bit-identical. f should accept numpy arrays elementwise; plain scalar
    functions are vectorized as a fallback.

    Non-finite samples are tolerated up to 1% of the draws (with a warning);
    beyond that an EvaluationError is raised.
    """
    if sample_count < 1000:
        raise ParameterError(f"sample_count must be >= 1000, got {sample_count}")
    rng = np.random.default_rng(seed)
    draws = [rng.normal(q.value, q.sigma, size=sample_count) for q in inputs]
    with np.errstate(all="ignore"):  # non-finite samples are counted below
        try:
            samples = np.asarray(f(*draws), dtype=float)
            if samples.shape != (sample_count,):
                raise TypeError("function did not vectorize")
        except (TypeError, ValueError):
            samples = np.asarray(np.vectorize(f)(*draws), dtype=float)
    finite = np.isfinite(samples)
    n_bad = int(sample_count - finite.sum())
    if n_bad > 0.01 * sample_count:
        raise EvaluationError(
            f"{n_bad}/{sample_count} Monte-Carlo samples were non-finite"
        )
    if n_bad:
        warnings.warn(
            f"discarded {n_bad}/{sample_count} non-finite Monte-Carlo samples",
            RuntimeWarning,
            stacklevel=2,
        )
        samples = samples[finite]
    if samples.size > 1:
        sigma = float(np.std(samples, ddof=1))
    else:
        sigma = 0.0
    return UncertainQuantity(float(np.mean(samples)), sigma, dimension)
