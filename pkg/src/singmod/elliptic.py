"""Elliptic integrals of the first and second kind and their classical machinery.

Complete integrals are evaluated by the arithmetic-geometric mean (quadratic
convergence, Abramowitz & Stegun 17.6); the incomplete first-kind integral
goes through Carlson's symmetric form R_F (Carlson, Numerical computation of
real or complex elliptic integrals, 1994).  On top of these sit the
hypergeometric series f(alpha), the singular-modulus bisection solver,
amplitude trisection/bisection, the quartic-denominator integrals of Bowman's
book, and the integral R = int_0^1 dx/(1-x^3)^(2/3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, DomainError, RangeError
from .quadrature import GAUSS_LEGENDRE, QuadratureSpec, integrate

_EPS = 2.220446049250313e-16

#: Default rule for the one-dimensional integrals in this module.
DEFAULT_QUADRATURE = QuadratureSpec(rule=GAUSS_LEGENDRE, nodes=64, panels=4)


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k in [0, 1] with its complement sqrt(1 - k^2)."""

    k: float
    complement: float = None  # type: ignore[assignment]

    def __post_init__(self):
        if not 0.0 <= self.k <= 1.0:
            raise DomainError(f"modulus must lie in [0, 1], got {self.k!r}")
        if self.complement is None:
            object.__setattr__(
                self, "complement", math.sqrt((1.0 - self.k) * (1.0 + self.k))
            )
        if abs(self.k ** 2 + self.complement ** 2 - 1.0) > 8.0 * _EPS:
            raise DomainError("complement does not match the modulus")


def _validate_modulus(k: float, *, allow_one: bool = False) -> None:
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"modulus must lie in [0, 1], got {k!r}")
    if k == 1.0 and not allow_one:
        raise DivergenceError("first-kind elliptic integral diverges at k = 1")


def _validate_amplitude(phi: float) -> None:
    if not 0.0 <= phi <= math.pi / 2 + 4.0 * _EPS:
        raise DomainError(f"amplitude must lie in [0, pi/2], got {phi!r}")


def _agm(a: float, b: float) -> float:
    """Common limit of the arithmetic-geometric mean iteration."""
    for _ in range(64):
        if abs(a - b) <= 4.0 * _EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind K(k) via the AGM."""
    _validate_modulus(k)
    if k == 0.0:
        return math.pi / 2
    return math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - k) * (1.0 + k))))


def complete_E(k: float) -> float:
    """Complete elliptic integral of the second kind E(k).

    Uses the AGM variant that accumulates the squared half-differences
    c_n = (a_n - b_n)/2:  E = K * (1 - sum 2^(n-1) c_n^2).
    """
    _validate_modulus(k, allow_one=True)
    if k == 0.0:
        return math.pi / 2
    if k == 1.0:
        return 1.0
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    csum = 0.5 * k * k
    pow2 = 1.0
    for _ in range(64):
        c = 0.5 * (a - b)
        if abs(c) <= 2.0 * _EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        pow2 *= 2.0
        csum += 0.5 * pow2 * c * c
    return math.pi / (a + b) * (1.0 - csum)


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson symmetric integral R_F(x, y, z); at most one argument zero."""
    if min(x, y, z) < 0.0 or (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DomainError("carlson_rf needs nonnegative arguments, at most one zero")
    x0, y0, z0 = x, y, z
    amean = (x + y + z) / 3.0
    a0 = amean
    q = (3.0 * _EPS) ** (-0.125) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    fourn = 1.0
    for _ in range(96):
        if q < fourn * abs(amean):
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        amean = 0.25 * (amean + lam)
        fourn *= 4.0
    big_x = (a0 - x0) / (fourn * amean)
    big_y = (a0 - y0) / (fourn * amean)
    big_z = -big_x - big_y
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    series = (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
              - 5.0 * e2 ** 3 / 208.0 + 3.0 * e3 * e3 / 104.0 + e2 * e2 * e3 / 16.0)
    return series / math.sqrt(amean)


def incomplete_F(phi: float, k: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi, k).

    F(phi, k) = sin(phi) * R_F(cos^2 phi, 1 - k^2 sin^2 phi, 1); the complete
    endpoint phi = pi/2 is routed through complete_K so both agree exactly.
    """
    _validate_amplitude(phi)
    _validate_modulus(k)
    if phi == 0.0:
        return 0.0
    if phi == math.pi / 2:
        return complete_K(k)
    s = math.sin(phi)
    c = math.cos(phi)
    return s * carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0)


def series_f(alpha: float, tol: float = 1e-12) -> float:
    """Partial sum of 1 + (1/2)^2 a + (1*3/(2*4))^2 a^2 + ... to accuracy tol.

    The series is the hypergeometric expansion of (2/pi) K(sqrt(alpha)); it
    converges for -1 <= alpha < 1, only linearly as alpha -> 1.
    """
    if alpha >= 1.0:
        raise DivergenceError("series diverges for alpha >= 1")
    if alpha < -1.0:
        raise DomainError("series undefined below alpha = -1")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    value, _bound = _series_f_tail(alpha, tol)
    return value


def _series_f_tail(alpha: float, tol: float, max_terms: int = 10 ** 6):
    """Sum the series; also return the geometric bound on the dropped tail."""
    term = 1.0
    total = 1.0
    a = abs(alpha)
    for n in range(max_terms):
        r = (2 * n + 1) / (2 * n + 2)
        term *= alpha * r * r
        total += term
        # successive term ratios approach alpha from below
        bound = abs(term) * a / (1.0 - a) if a > 0.0 else 0.0
        if bound <= tol:
            return total, bound
    raise RangeError(f"series did not reach tol={tol} within {max_terms} terms")


def ratio_Kprime_over_K(k: float) -> float:
    """K'(k)/K(k) = K(sqrt(1-k^2))/K(k); strictly decreasing on (0, 1)."""
    if not 0.0 < k < 1.0:
        raise DivergenceError("K'/K diverges or vanishes at the endpoints of (0, 1)")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return _agm(1.0, kp) / _agm(1.0, k)


def singular_modulus(n: float, residual_tol: float = 1e-12) -> Modulus:
    """The unique k in (0, 1) with K'(k)/K(k) = sqrt(n), found by bisection."""
    if not n > 0.0:
        raise DomainError(f"n must be positive, got {n!r}")
    target = math.sqrt(n)
    lo, hi = 1e-300, 1.0 - 1e-16
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if ratio_Kprime_over_K(mid) > target:
            lo = mid
        else:
            hi = mid
    k = 0.5 * (lo + hi)
    if abs(ratio_Kprime_over_K(k) - target) > residual_tol:
        raise RangeError(f"bisection residual above {residual_tol} for n={n}")
    return Modulus(k)


def amplitude_add(phi: float, psi: float, k: float) -> float:
    """The amplitude mu with F(phi) + F(psi) = F(mu) (Euler's addition law).

    mu solves cos(mu) = cos(phi)cos(psi) - sin(phi)sin(psi) sqrt(1 - k^2 sin^2 mu),
    bisected on [0, pi/2]; raises RangeError when F(phi) + F(psi) > K(k).
    """
    _validate_amplitude(phi)
    _validate_amplitude(psi)
    _validate_modulus(k)
    if phi == 0.0:
        return psi
    if psi == 0.0:
        return phi
    cc = math.cos(phi) * math.cos(psi)
    ss = math.sin(phi) * math.sin(psi)

    def h(mu):
        delta = math.sqrt(1.0 - (k * math.sin(mu)) ** 2)
        return math.cos(mu) - (cc - ss * delta)

    if h(math.pi / 2) > 0.0:
        raise RangeError("F(phi) + F(psi) exceeds K(k); mu would pass pi/2")
    lo, hi = 0.0, math.pi / 2
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if h(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def trisection_quartic(x: float, k: float) -> float:
    """Residual of the trisection quartic k^2 x^4 - 2 k^2 x^3 + 2x - 1."""
    k2 = k * k
    return k2 * x ** 4 - 2.0 * k2 * x ** 3 + 2.0 * x - 1.0


def trisection_amplitude(k: float, residual_tol: float = 1e-10) -> float:
    """Amplitude phi with F(phi, k) = K(k)/3.

    sin(phi) is the root in (0, 1) of the quartic k^2 x^4 - 2 k^2 x^3 + 2x - 1;
    candidate roots come from the companion matrix, are polished by Newton, and
    the one whose F-residual passes is returned.
    """
    if not 0.0 < k < 1.0:
        raise DomainError(f"trisection needs 0 < k < 1, got {k!r}")
    k2 = k * k
    target = complete_K(k) / 3.0
    candidates = np.roots([k2, -2.0 * k2, 0.0, 2.0, -1.0])
    for root in candidates:
        if abs(root.imag) > 1e-8 or not 0.0 < root.real < 1.0:
            continue
        x = float(root.real)
        for _ in range(4):
            dfx = 4.0 * k2 * x ** 3 - 6.0 * k2 * x ** 2 + 2.0
            x -= trisection_quartic(x, k) / dfx
        phi = math.asin(min(1.0, x))
        if abs(incomplete_F(phi, k) - target) <= residual_tol:
            return phi
    raise RangeError(f"no quartic root in (0,1) met the F-residual at k={k}")


def bisection_amplitude(theta: float, k: float, residual_tol: float = 1e-10) -> float:
    """Amplitude phi with F(phi, k) = F(theta, k)/2.

    sin(phi) = sin(theta/2) / sqrt(1/2 + Delta(theta)/2) with
    Delta(theta) = sqrt(1 - k^2 sin^2 theta); the halving is verified
    against incomplete_F before returning.
    """
    _validate_amplitude(theta)
    _validate_modulus(k)
    delta = math.sqrt(1.0 - (k * math.sin(theta)) ** 2)
    s = math.sin(0.5 * theta) / math.sqrt(0.5 + 0.5 * delta)
    phi = math.asin(min(1.0, s))
    if abs(incomplete_F(phi, k) - 0.5 * incomplete_F(theta, k)) > residual_tol:
        raise RangeError("bisection identity residual above tolerance")
    return phi


def bowman_integral(x: float, alpha: float,
                    spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """int_0^x dt / sqrt(1 + 2 t^2 cos(2 alpha) + t^4) for 0 < alpha < pi/2.

    x = math.inf selects the unbounded upper limit.  The substitution
    t = tan(theta) maps [0, inf) onto [0, pi/2) and turns the integrand into
    1/sqrt(1 - sin^2(alpha) sin^2(2 theta)), so no infinities ever reach the
    quadrature nodes.
    """
    if not 0.0 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    if not x > 0.0:
        raise DomainError(f"upper limit must be positive, got {x!r}")
    upper = math.pi / 2 if math.isinf(x) else math.atan(x)
    s2 = math.sin(alpha) ** 2

    def integrand(theta):
        return 1.0 / np.sqrt(1.0 - s2 * np.sin(2.0 * theta) ** 2)

    return integrate(integrand, 0.0, upper, spec)


def legendre_R(spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """int_0^1 dx / (1 - x^3)^(2/3) by direct quadrature.

    The substitution x = 1 - s^3 removes the endpoint singularity and leaves
    the bounded integrand 3 / (3 - 3 s^3 + s^6)^(2/3) on [0, 1].
    """

    def integrand(s):
        return 3.0 / (3.0 - 3.0 * s ** 3 + s ** 6) ** (2.0 / 3.0)

    return integrate(integrand, 0.0, 1.0, spec)
