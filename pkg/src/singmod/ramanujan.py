"""Closed forms built on the singular modulus k = sin(pi/12).

Ramanujan's gamma-function expression for the perimeter of an ellipse of
eccentricity sin(15 deg), the matching gamma form of K(sin 15 deg), and the
pendulum-period renormalization that trades amplitude for length at constant
period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import complete_E, complete_K
from .errors import DivergenceError, DomainError
from .gammafn import gamma

SIN_15 = math.sin(math.pi / 12)


@dataclass(frozen=True)
class EllipseSpec:
    semimajor: float
    eccentricity: float = SIN_15

    def __post_init__(self):
        if not self.semimajor > 0.0:
            raise DomainError("semimajor axis must be positive")
        if not 0.0 <= self.eccentricity < 1.0:
            raise DomainError("eccentricity must lie in [0, 1)")


@dataclass(frozen=True)
class PendulumSpec:
    """Simple pendulum; half_amplitude is the maximum angle from the vertical."""

    length: float
    half_amplitude: float
    gravity: float = 9.80665

    def __post_init__(self):
        if not self.length > 0.0:
            raise DomainError("length must be positive")
        if not self.gravity > 0.0:
            raise DomainError("gravity must be positive")
        if not 0.0 < self.half_amplitude < math.pi:
            raise DivergenceError(
                "oscillation requires half amplitude in (0, pi); the period "
                "diverges at the inverted position")


def perimeter_quadrature(e: EllipseSpec) -> float:
    """Ellipse perimeter p = 4 a E(eccentricity)."""
    return 4.0 * e.semimajor * complete_E(e.eccentricity)


def ramanujan_perimeter_gamma(a: float) -> float:
    """Perimeter of the ellipse with eccentricity sin(15 deg), semimajor a:

    a sqrt(pi/sqrt(3)) { (1 + 1/sqrt(3)) Gamma(1/3)/Gamma(5/6)
                         + 2 Gamma(5/6)/Gamma(1/3) }.
    """
    if not a > 0.0:
        raise DomainError("semimajor axis must be positive")
    g13 = gamma(1.0 / 3.0)
    g56 = gamma(5.0 / 6.0)
    bracket = (1.0 + 1.0 / math.sqrt(3.0)) * g13 / g56 + 2.0 * g56 / g13
    return a * math.sqrt(math.pi / math.sqrt(3.0)) * bracket


def K_sin15_gamma_form() -> float:
    """K(sin 15 deg) = (1/(2 sqrt(3))) sqrt(pi/sqrt(3)) Gamma(1/6)/Gamma(2/3)."""
    return (math.sqrt(math.pi / math.sqrt(3.0)) / (2.0 * math.sqrt(3.0))
            * gamma(1.0 / 6.0) / gamma(2.0 / 3.0))


def pendulum_period(p: PendulumSpec) -> float:
    """Exact period 4 sqrt(L/g) K(sin(half_amplitude/2))."""
    k = math.sin(0.5 * p.half_amplitude)
    return 4.0 * math.sqrt(p.length / p.gravity) * complete_K(k)
