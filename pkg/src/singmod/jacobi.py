"""Real Jacobi elliptic functions sn, cn, dn.

Evaluation follows the descending-Landen/AGM recursion of Abramowitz &
Stegun 16.4: run the AGM scales a_n, b_n, c_n upward, seed the amplitude
phi_N = 2^N a_N u, and recover phi_0 by the backward half-angle recurrence
sin(2 phi_{n-1} - phi_n) = (c_n/a_n) sin(phi_n).  Arguments are first
reduced into [0, K] with the period and reflection laws, which fixes the
signs of sn and cn on the whole real line.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .elliptic import complete_K, carlson_rf
from .errors import DomainError

_EPS = 2.220446049250313e-16


class JacobiTriple(NamedTuple):
    sn: float
    cn: float
    dn: float


def _sncndn_principal(u: float, k: float) -> JacobiTriple:
    """Core AGM evaluation for 0 <= u <= K(k), 0 <= k < 1."""
    if k < 1e-14:
        return JacobiTriple(math.sin(u), math.cos(u), 1.0)
    a = [1.0]
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = [k]
    n = 0
    while abs(c[n]) > _EPS * a[n] and n < 48:
        a.append(0.5 * (a[n] + b))
        c.append(0.5 * (a[n] - b))
        b = math.sqrt(a[n] * b)
        n += 1
    phi = (2.0 ** n) * a[n] * u
    for i in range(n, 0, -1):
        t = c[i] / a[i] * math.sin(phi)
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, t))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(1.0 - (k * sn) * (k * sn))
    return JacobiTriple(sn, cn, dn)


def jacobi_sncndn(u: float, k: float) -> JacobiTriple:
    """The triple (sn u, cn u, dn u) for real u and modulus 0 <= k < 1.

    The argument is reduced modulo the period 4K; sn(4K - v) = -sn(v) and
    cn(2K - v) = -cn(v) supply the signs outside the principal interval.
    """
    if not 0.0 <= k < 1.0:
        if k == 1.0:
            raise DomainError("modulus k = 1 (hyperbolic degeneration) is unsupported")
        raise DomainError(f"modulus must lie in [0, 1), got {k!r}")
    if k == 0.0:
        return JacobiTriple(math.sin(u), math.cos(u), 1.0)
    quarter = complete_K(k)
    r = math.fmod(u, 4.0 * quarter)
    if r < 0.0:
        r += 4.0 * quarter
    sign_sn = 1.0
    if r > 2.0 * quarter:
        r = 4.0 * quarter - r
        sign_sn = -1.0
    sign_cn = 1.0
    if r > quarter:
        r = 2.0 * quarter - r
        sign_cn = -1.0
    sn, cn, dn = _sncndn_principal(r, k)
    return JacobiTriple(sign_sn * sn, sign_cn * cn, dn)


def invert_sn(x: float, k: float) -> float:
    """The u in [-K, K] with sn(u, k) = x, i.e. the defining integral
    int_0^x dt / sqrt((1-t^2)(1-k^2 t^2)), evaluated through Carlson R_F."""
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"sn inverse needs |x| <= 1, got {x!r}")
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k!r}")
    s = abs(x)
    if s == 0.0:
        return 0.0
    if s == 1.0:
        return math.copysign(complete_K(k), x)
    u = s * carlson_rf((1.0 - s) * (1.0 + s), (1.0 - k * s) * (1.0 + k * s), 1.0)
    return math.copysign(u, x)
