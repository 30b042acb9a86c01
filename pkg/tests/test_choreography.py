import csv
import math

import numpy as np
import pytest

from singmod.choreography import (
    TRAJECTORY_COLUMNS,
    ChoreographyConfig,
    body_state,
    choreography_scan,
    center_of_mass_residual,
    export_trajectories,
    lemniscate_position,
    lemniscate_velocity,
    max_residual_norm,
    three_body_positions,
)
from singmod.elliptic import complete_K
from singmod.errors import DomainError

K_STAR = math.cos(math.pi / 12)


def test_position_origin_and_quarter_period():
    assert lemniscate_position(0.0, 0.5) == (0.0, 0.0)
    p = lemniscate_position(complete_K(K_STAR), K_STAR)
    assert p.x == pytest.approx(1.0, abs=1e-13)
    assert p.y == pytest.approx(0.0, abs=1e-13)


def test_position_third_of_K_is_half():
    p = lemniscate_position(complete_K(K_STAR) / 3.0, K_STAR)
    assert p.x == pytest.approx(0.5, abs=1e-13)


def test_points_lie_on_lemniscate():
    rng = np.random.default_rng(41)
    for _ in range(200):
        k = float(rng.uniform(0.0, 0.99))
        t = float(rng.uniform(-12.0, 12.0))
        x, y = lemniscate_position(t, k)
        assert (x * x + y * y) ** 2 == pytest.approx(x * x - y * y, abs=1e-12)


def test_velocity_against_finite_differences():
    rng = np.random.default_rng(43)
    h = 1e-5
    for _ in range(60):
        k = float(rng.uniform(0.05, 0.99))
        t = float(rng.uniform(-5.0, 5.0))
        v = lemniscate_velocity(t, k)
        p_plus = lemniscate_position(t + h, k)
        p_minus = lemniscate_position(t - h, k)
        assert v.x == pytest.approx((p_plus.x - p_minus.x) / (2 * h), abs=1e-7)
        assert v.y == pytest.approx((p_plus.y - p_minus.y) / (2 * h), abs=1e-7)


def test_velocity_at_origin_direction():
    v = lemniscate_velocity(0.0, 0.7)
    assert v.x == pytest.approx(0.5, abs=1e-14)
    assert v.y == pytest.approx(0.5, abs=1e-14)


def test_velocity_parity():
    # x(t) odd and y(t) odd make both velocity components even in t
    for t in (0.4, 1.1, 2.0):
        v1 = lemniscate_velocity(t, 0.8)
        v2 = lemniscate_velocity(-t, 0.8)
        assert v1.x == pytest.approx(v2.x, abs=1e-13)
        assert v1.y == pytest.approx(v2.y, abs=1e-13)


def test_body_state_on_curve():
    rng = np.random.default_rng(53)
    for _ in range(30):
        k = float(rng.uniform(0.0, 0.99))
        t = float(rng.uniform(-8.0, 8.0))
        state = body_state(t, k)
        x, y = state.position
        assert (x * x + y * y) ** 2 == pytest.approx(x * x - y * y, abs=1e-10)
        assert state.time == t
        assert state.velocity == lemniscate_velocity(t, k)


def test_three_bodies_at_quarter_period():
    K = complete_K(K_STAR)
    p1, p2, p3 = three_body_positions(K, K_STAR)
    assert p1.x == pytest.approx(1.0, abs=1e-12)
    assert p2.x == pytest.approx(-0.5, abs=1e-12)
    assert p3.x == pytest.approx(-0.5, abs=1e-12)


def test_three_bodies_at_zero_symmetric():
    p1, p2, p3 = three_body_positions(0.0, K_STAR)
    assert p1 == (0.0, 0.0)
    assert p2.x == pytest.approx(-p3.x, abs=1e-13)
    assert p2.y == pytest.approx(-p3.y, abs=1e-13)


def test_residual_vanishes_at_choreographic_modulus():
    assert max_residual_norm(K_STAR, samples=1024) < 1e-10


def test_residual_large_off_modulus():
    r = center_of_mass_residual(complete_K(0.5), 0.5)
    assert math.hypot(r.x, r.y) > 1e-3


def test_momentum_sum_at_choreographic_modulus():
    K = complete_K(K_STAR)
    shift = 4.0 * K / 3.0
    worst = 0.0
    for i in range(128):
        t = 4.0 * K * i / 128.0
        vs = [lemniscate_velocity(t + d, K_STAR) for d in (0.0, shift, -shift)]
        worst = max(worst, math.hypot(sum(v.x for v in vs), sum(v.y for v in vs)))
    assert worst < 1e-7


def test_positions_periodic():
    rng = np.random.default_rng(47)
    for _ in range(40):
        k = float(rng.uniform(0.1, 0.99))
        T = 4.0 * complete_K(k)
        t = float(rng.uniform(0.0, T))
        a = lemniscate_position(t, k)
        b = lemniscate_position(t + T, k)
        assert abs(a.x - b.x) < 1e-10 and abs(a.y - b.y) < 1e-10


class TestScan:
    def test_minimum_near_choreographic_modulus(self):
        scan = choreography_scan(0.9, 0.99, grid=40, samples=64)
        best_k = min(scan.points, key=lambda p: p[1])[0]
        assert abs(best_k - K_STAR) < 0.01

    def test_root_refinement(self):
        scan = choreography_scan(0.9, 0.99, grid=10, samples=32)
        assert scan.root is not None
        assert abs(scan.root - K_STAR) < 1e-10

    def test_low_interval_all_large(self):
        scan = choreography_scan(0.1, 0.3, grid=10, samples=32)
        assert all(r > 1e-2 for _, r in scan.points)
        assert scan.root is None

    def test_domain(self):
        with pytest.raises(DomainError):
            choreography_scan(0.5, 0.4)
        with pytest.raises(DomainError):
            choreography_scan(0.4, 0.5, grid=1)


class TestExport:
    def test_rows_and_residuals(self, tmp_path):
        out = tmp_path / "traj.csv"
        cfg = ChoreographyConfig(samples=4, output_path=str(out))
        rows = export_trajectories(cfg)
        assert len(rows) == 4
        # first row at t = 0: leading body at the node of the figure
        assert rows[0][0] == 0.0
        assert rows[0][1] == 0.0 and rows[0][2] == 0.0
        # row at t = K: leading body at (1, 0)
        assert rows[1][0] == pytest.approx(complete_K(cfg.modulus), rel=1e-15)
        assert rows[1][1] == pytest.approx(1.0, abs=1e-12)
        assert rows[1][2] == pytest.approx(0.0, abs=1e-12)
        for row in rows:
            assert abs(row[7]) < 1e-10 and abs(row[8]) < 1e-10

        with open(out, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            data = list(reader)
        assert tuple(header) == TRAJECTORY_COLUMNS
        assert len(data) == 4
        assert float(data[1][1]) == pytest.approx(1.0, abs=1e-12)

    def test_off_modulus_residual_columns(self):
        rows = export_trajectories(ChoreographyConfig(modulus=0.5, samples=8))
        assert max(math.hypot(r[7], r[8]) for r in rows) > 1e-3

    def test_unwritable_path(self, tmp_path):
        cfg = ChoreographyConfig(samples=4,
                                 output_path=str(tmp_path / "no_dir" / "x.csv"))
        with pytest.raises(OSError):
            export_trajectories(cfg)

    def test_config_validation(self):
        with pytest.raises(DomainError):
            ChoreographyConfig(samples=2)
