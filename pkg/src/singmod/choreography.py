"""Equal-mass three-body choreography on the lemniscate (x^2+y^2)^2 = x^2-y^2.

One body moves along x(t) = sn t/(1+cn^2 t), y(t) = sn t cn t/(1+cn^2 t)
with period 4K; the other two trail it by the phase offsets +-4K/3.  The
module is purely kinematic: it evaluates positions, closed-form velocities,
the center-of-mass residual, and scans the modulus for the unique k at
which the residual vanishes identically.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .elliptic import complete_K
from .errors import DomainError
from .jacobi import jacobi_sncndn


class Vec2(NamedTuple):
    x: float
    y: float


class BodyState(NamedTuple):
    """Kinematic state of one body at elliptic-argument time t."""

    position: Vec2
    velocity: Vec2
    time: float


@dataclass(frozen=True)
class ChoreographyConfig:
    """Sampling configuration for trajectory export."""

    modulus: float = math.cos(math.pi / 12)
    samples: int = 1024
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.samples < 3:
            raise DomainError("need at least 3 samples per period")


#: CSV column order of export_trajectories.
TRAJECTORY_COLUMNS = ("t", "x1", "y1", "x2", "y2", "x3", "y3",
                      "residual_x", "residual_y")


def lemniscate_position(t: float, k: float) -> Vec2:
    sn, cn, _ = jacobi_sncndn(t, k)
    denom = 1.0 + cn * cn
    return Vec2(sn / denom, sn * cn / denom)


def lemniscate_velocity(t: float, k: float) -> Vec2:
    """Closed-form time derivative of the position.

    With s = sn t, c = cn t, d = dn t and s' = c d, c' = -s d:
    x' = c d (3 - c^2)/(1 + c^2)^2,  y' = d (3 c^2 - 1)/(1 + c^2)^2.
    """
    sn, cn, dn = jacobi_sncndn(t, k)
    denom = (1.0 + cn * cn) ** 2
    return Vec2(cn * dn * (3.0 - cn * cn) / denom,
                dn * (3.0 * cn * cn - 1.0) / denom)


def body_state(t: float, k: float) -> BodyState:
    return BodyState(lemniscate_position(t, k), lemniscate_velocity(t, k), t)


def three_body_positions(t: float, k: float) -> tuple[Vec2, Vec2, Vec2]:
    """Positions of the three bodies at equal time spacing 4K/3."""
    shift = 4.0 * complete_K(k) / 3.0
    return (lemniscate_position(t, k),
            lemniscate_position(t + shift, k),
            lemniscate_position(t - shift, k))


def center_of_mass_residual(t: float, k: float) -> Vec2:
    """Vector sum x(t) + x(t + 4K/3) + x(t - 4K/3); zero only at the
    choreographic modulus k^2 = (2 + sqrt(3))/4."""
    p1, p2, p3 = three_body_positions(t, k)
    return Vec2(p1.x + p2.x + p3.x, p1.y + p2.y + p3.y)


def max_residual_norm(k: float, samples: int = 1024) -> float:
    """Maximum Euclidean norm of the residual over one period grid."""
    period = 4.0 * complete_K(k)
    worst = 0.0
    for i in range(samples):
        r = center_of_mass_residual(period * i / samples, k)
        worst = max(worst, math.hypot(r.x, r.y))
    return worst


def _signed_x_residual(k: float) -> float:
    # x-component of the residual at t = K; changes sign across the
    # choreographic modulus and so supports bisection.
    return center_of_mass_residual(complete_K(k), k).x


class ChoreographyScan(NamedTuple):
    """Grid of (k, max residual norm) pairs plus the refined residual root."""

    points: list[tuple[float, float]]
    root: Optional[float]


def choreography_scan(k_lo: float, k_hi: float, grid: int = 100,
                      samples: int = 256) -> ChoreographyScan:
    """Scan the modulus interval for the residual-free choreography.

    Evaluates the max residual norm on a k-grid, then refines the zero of the
    signed t = K residual by bisection when the grid brackets a sign change.
    """
    if not 0.0 < k_lo < k_hi < 1.0:
        raise DomainError("need 0 < k_lo < k_hi < 1")
    if grid < 2:
        raise DomainError("need at least 2 grid points")
    points = []
    for i in range(grid):
        k = k_lo + (k_hi - k_lo) * i / (grid - 1)
        points.append((k, max_residual_norm(k, samples)))

    root = None
    f_lo = _signed_x_residual(k_lo)
    f_hi = _signed_x_residual(k_hi)
    if f_lo == 0.0:
        root = k_lo
    elif f_hi == 0.0:
        root = k_hi
    elif (f_lo > 0.0) != (f_hi > 0.0):
        lo, hi = k_lo, k_hi
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if (_signed_x_residual(mid) > 0.0) == (f_lo > 0.0):
                lo = mid
            else:
                hi = mid
        root = 0.5 * (lo + hi)
    return ChoreographyScan(points, root)


def export_trajectories(cfg: ChoreographyConfig) -> list[tuple[float, ...]]:
    """Tabulate one full period of the three-body motion.

    Rows follow TRAJECTORY_COLUMNS; when cfg.output_path is set the table is
    also written there as CSV with a single header line.
    """
    period = 4.0 * complete_K(cfg.modulus)
    rows = []
    for i in range(cfg.samples):
        t = period * i / cfg.samples
        p1, p2, p3 = three_body_positions(t, cfg.modulus)
        rows.append((t, p1.x, p1.y, p2.x, p2.y, p3.x, p3.y,
                     p1.x + p2.x + p3.x, p1.y + p2.y + p3.y))
    if cfg.output_path is not None:
        with open(cfg.output_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(TRAJECTORY_COLUMNS)
            writer.writerows(rows)
    return rows
