"""Cubic-lattice return probability: Watson triple integrals and a Monte
Carlo walker.

W   = (1/pi^3)    intintint dx dy dz / (3 - cx cy - cy cz - cz cx)
W+  = (sqrt2/pi^3) intintint dx dy dz / (3 + cx cy + cy cz + cz cx)

over [0, pi]^3 with cx = cos x etc.  The minus-sign integrand blows up like
1/r^2 at the corners (0,0,0) and (pi,pi,pi); exploiting the symmetry of the
integrand under coordinate permutation and under (x,y,z) -> (pi-x,pi-y,pi-z)
the cube reduces to one singular octant plus one smooth box, and a Duffy
substitution (y = x eta, z = x zeta) makes the singular part analytic.  The
plus-sign integrand is bounded (its denominator never drops below 2).

The return probability of the simple random walk on Z^3 is p = 1 - 1/(3 W+).
The Monte Carlo estimator uses a counter-based generator (SplitMix64
finalizer over a per-walk counter block), so the step sequence of walk w
under seed s is a pure function of (s, w): results are bit-for-bit
reproducible under any thread count, and extending the horizon extends the
very same walks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from numba import config as _numba_config

_numba_config.THREADING_LAYER = "workqueue"

from numba import int64, njit, prange, uint64  # noqa: E402

from .errors import ConfigurationError, DomainError  # noqa: E402
from .quadrature import (  # noqa: E402
    OPEN_RULES,
    QuadratureSpec,
    gauss_legendre_points,
    tanh_sinh_points,
)

#: Default rules: the desingularized W and the smooth W+ both converge to
#: machine precision well below these node counts.
DEFAULT_W_SPEC = QuadratureSpec(rule="gauss_legendre", nodes=24, panels=2)
DEFAULT_WPLUS_SPEC = QuadratureSpec(rule="gauss_legendre", nodes=32, panels=2)


def lattice_integrand(x, y, z, sign: int):
    """1 / (3 + sign*(cos x cos y + cos y cos z + cos z cos x)).

    sign=-1 gives the W integrand, sign=+1 the W+ integrand; both variants
    share this single implementation.
    """
    if sign not in (-1, 1):
        raise DomainError("sign must be -1 or +1")
    cx, cy, cz = np.cos(x), np.cos(y), np.cos(z)
    return 1.0 / (3.0 + sign * (cx * cy + cy * cz + cz * cx))


def _axis_points(lo: float, hi: float, spec: QuadratureSpec):
    if spec.rule not in OPEN_RULES:
        raise ConfigurationError(
            "closed rules place a node on the singular corner (0,0,0); "
            "choose gauss_legendre or tanh_sinh")
    if spec.rule == "gauss_legendre":
        return gauss_legendre_points(lo, hi, spec.nodes, spec.panels)
    xs, ws = [], []
    edges = np.linspace(lo, hi, spec.panels + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        x, w = tanh_sinh_points(a, b, spec.nodes)
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)


def _tensor3(wx, wy, wz, values):
    w3 = wx[:, None, None] * wy[None, :, None] * wz[None, None, :]
    return float(np.sum(w3 * values))


@lru_cache(maxsize=16)
def watson_W(spec: QuadratureSpec = DEFAULT_W_SPEC) -> float:
    """The normalized minus-sign triple integral W.

    Decomposition: with I_A the integral over [0,pi/2]^3 and I_B the integral
    over [pi/2,pi] x [0,pi/2]^2, the reflection and permutation symmetries
    give W = (2 I_A + 6 I_B)/pi^3.  I_A is computed in Duffy variables where
    the corner singularity cancels exactly against the x^2 Jacobian; the
    denominator is assembled from versines v = 2 sin^2(x/2) to avoid
    cancellation near the corner.
    """
    half = math.pi / 2
    x, wx = _axis_points(0.0, half, spec)
    e, we = _axis_points(0.0, 1.0, spec)

    bx = x[:, None, None]
    be = e[None, :, None]
    bz = e[None, None, :]
    vx = 2.0 * np.sin(0.5 * bx) ** 2
    vy = 2.0 * np.sin(0.5 * bx * be) ** 2
    vz = 2.0 * np.sin(0.5 * bx * bz) ** 2
    denom = 2.0 * (vx + vy + vz) - (vx * vy + vy * vz + vz * vx)
    i_a = 3.0 * _tensor3(wx, we, we, bx ** 2 / denom)

    xb, wxb = _axis_points(half, math.pi, spec)
    vals = lattice_integrand(xb[:, None, None], x[None, :, None],
                             x[None, None, :], sign=-1)
    i_b = _tensor3(wxb, wx, wx, vals)

    return (2.0 * i_a + 6.0 * i_b) / math.pi ** 3


@lru_cache(maxsize=16)
def watson_W_plus(spec: QuadratureSpec = DEFAULT_WPLUS_SPEC) -> float:
    """The plus-sign integral W+ (bounded integrand, sqrt(2) prefactor)."""
    x, wx = _axis_points(0.0, math.pi, spec)
    vals = lattice_integrand(x[:, None, None], x[None, :, None],
                             x[None, None, :], sign=+1)
    return math.sqrt(2.0) / math.pi ** 3 * _tensor3(wx, wx, wx, vals)


def polya_return_probability(spec: QuadratureSpec = DEFAULT_WPLUS_SPEC) -> float:
    """Return probability p = 1 - 1/(3 W+) of the simple walk on Z^3."""
    return 1.0 - 1.0 / (3.0 * watson_W_plus(spec))


# ---------------------------------------------------------------------------
# Monte Carlo oracle
# ---------------------------------------------------------------------------

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
# largest multiple of 6 representable in 64 bits; draws at or above it are
# rejected so that r % 6 is exactly uniform
_REJECT = np.uint64(0xFFFFFFFFFFFFFFFC)
_WALK_BLOCK = np.uint64(20)  # 2^20 counter slots per walk


@njit(uint64(uint64), cache=True)
def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


@njit(int64(uint64, int64, int64), cache=True)
def _first_return_step(seed_mixed, walk, max_steps):
    """Step index of the first return to the origin, 0 if none occurs."""
    x = int64(0)
    y = int64(0)
    z = int64(0)
    base = seed_mixed + (uint64(walk) << _WALK_BLOCK) * _GAMMA
    for step in range(1, max_steps + 1):
        r = _mix64(base + uint64(step) * _GAMMA)
        while r >= _REJECT:
            r = _mix64(r + _GAMMA)
        d = r % np.uint64(6)
        if d == 0:
            x += 1
        elif d == 1:
            x -= 1
        elif d == 2:
            y += 1
        elif d == 3:
            y -= 1
        elif d == 4:
            z += 1
        else:
            z -= 1
        if x == 0 and y == 0 and z == 0:
            return step
    return 0


@njit(int64(uint64, int64, int64), parallel=True, cache=True)
def _count_returns(seed, n_walks, max_steps):
    seed_mixed = _mix64(seed * _GAMMA + np.uint64(1))
    returns = int64(0)
    for w in prange(n_walks):
        if _first_return_step(seed_mixed, w, max_steps) > 0:
            returns += 1
    return returns


@dataclass(frozen=True)
class WalkEstimate:
    """Truncated-horizon return-probability estimate."""

    n_walks: int
    max_steps: int
    returns: int
    p_hat: float
    stderr: float
    seed: int


@lru_cache(maxsize=32)
def mc_return_probability(n_walks: int, max_steps: int, seed: int) -> WalkEstimate:
    """Fraction of walks that revisit the origin within max_steps.

    Walks that have not returned by the horizon count as non-returns, which
    biases the estimate below the true return probability.
    """
    if n_walks < 1:
        raise DomainError("need at least one walk")
    if max_steps < 2:
        raise DomainError("a return needs at least two steps")
    returns = int(_count_returns(np.uint64(seed & 0xFFFFFFFFFFFFFFFF),
                                 n_walks, max_steps))
    p_hat = returns / n_walks
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / n_walks)
    return WalkEstimate(n_walks=n_walks, max_steps=max_steps, returns=returns,
                        p_hat=p_hat, stderr=stderr, seed=seed)
