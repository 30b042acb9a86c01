"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The Monte Carlo run (10^6 walks, 10^4-step horizon) is the slow item; its
result is cached and shared with the full verification run.
"""

import math
import time

import numpy as np
import pytest

from singmod.choreography import choreography_scan, max_residual_norm
from singmod.cli import main
from singmod.elliptic import (
    bisection_amplitude,
    bowman_integral,
    complete_E,
    complete_K,
    incomplete_F,
    legendre_R,
    ratio_Kprime_over_K,
    series_f,
    singular_modulus,
    trisection_amplitude,
)
from singmod.gammafn import beta, gamma
from singmod.jacobi import jacobi_sncndn
from singmod.quadrature import adaptive_simpson
from singmod.ramanujan import (
    EllipseSpec,
    K_sin15_gamma_form,
    PendulumSpec,
    pendulum_period,
    perimeter_quadrature,
    ramanujan_perimeter_gamma,
)
from singmod.randomwalk import (
    mc_return_probability,
    polya_return_probability,
    watson_W,
)
from singmod.verify import run_verification

SQRT3 = math.sqrt(3.0)
SIN15 = math.sin(math.pi / 12)
COS15 = math.cos(math.pi / 12)
K_STAR2 = (2.0 + SQRT3) / 4.0

MC_WALKS = 10 ** 6
MC_STEPS = 10 ** 4
MC_SEED = 42


def _report(criterion: int, passed: bool, detail: str) -> None:
    print(f"{'PASS' if passed else 'FAIL'} criterion {criterion:2d}: {detail}")
    assert passed, f"criterion {criterion}: {detail}"


@pytest.fixture(scope="module")
def mc_big():
    return mc_return_probability(MC_WALKS, MC_STEPS, MC_SEED)


def test_criterion_01_singular_modulus_n3():
    t0 = time.perf_counter()
    k = singular_modulus(3.0).k
    elapsed = time.perf_counter() - t0
    err = abs(k ** 2 - (2.0 - SQRT3) / 4.0)
    _report(1, err < 1e-10 and elapsed < 1.0,
            f"singular_modulus(3): |k^2 - (2-sqrt3)/4| = {err:.2e}, "
            f"{elapsed * 1000:.0f} ms")


def test_criterion_02_ratio_at_sin15():
    rel = abs(ratio_Kprime_over_K(SIN15) - SQRT3) / SQRT3
    _report(2, rel < 1e-12, f"K'/K at sin(pi/12): rel err = {rel:.2e}")


def test_criterion_03_series_fixed_point():
    alpha = (2.0 - SQRT3) / 4.0
    f_a = series_f(alpha, 1e-12)
    f_b = series_f(1.0 - alpha, 1e-12)
    rel = abs(f_b - SQRT3 * f_a) / f_a
    _report(3, rel < 1e-8, f"f(1-a) vs sqrt(3) f(a): rel err = {rel:.2e}")


def test_criterion_04_R_integral_triple_agreement():
    values = [
        legendre_R(),
        beta(1 / 3, 1 / 3) / 3.0,
        4.0 / (3.0 * 4.0 ** (1 / 3) * 3.0 ** 0.25) * complete_K(COS15),
        4.0 * SQRT3 / (3.0 * 4.0 ** (1 / 3) * 3.0 ** 0.25) * complete_K(SIN15),
    ]
    worst = max(abs(a - b) / abs(b) for a in values for b in values)
    _report(4, worst < 1e-9, f"four routes to R: worst pairwise rel = {worst:.2e}")


def test_criterion_05_ramanujan_perimeter():
    p_gamma = ramanujan_perimeter_gamma(1.0)
    p_agm = perimeter_quadrature(EllipseSpec(1.0, SIN15))
    rel = abs(p_gamma - p_agm) / p_agm
    _report(5, rel < 1e-10, f"perimeter gamma form vs 4E: rel err = {rel:.2e}")


def test_criterion_06_KE_relation():
    K = complete_K(SIN15)
    E = complete_E(SIN15)
    residual = abs(K * (E - (SQRT3 + 1.0) / (2.0 * SQRT3) * K)
                   - math.pi / (4.0 * SQRT3))
    _report(6, residual < 1e-12, f"K-E relation residual = {residual:.2e}")


def test_criterion_07_K_gamma_form():
    K = complete_K(SIN15)
    rel = abs(K_sin15_gamma_form() - K) / K
    _report(7, rel < 1e-12, f"K(sin 15) gamma form: rel err = {rel:.2e}")


def test_criterion_08_jacobi_suite():
    rng = np.random.default_rng(MC_SEED)
    worst_add = 0.0
    for _ in range(200):
        k = float(rng.uniform(0.0, 0.95))
        K = complete_K(k)
        u = float(rng.uniform(-2.0 * K, 2.0 * K))
        v = float(rng.uniform(-2.0 * K, 2.0 * K))
        su, cu, du = jacobi_sncndn(u, k)
        sv, cv, dv = jacobi_sncndn(v, k)
        rhs = (sv * cu * du + su * cv * dv) / (1.0 - (k * su * sv) ** 2)
        worst_add = max(worst_add, abs(jacobi_sncndn(u + v, k).sn - rhs))

    worst_per = 0.0
    for _ in range(100):
        k = float(rng.uniform(0.0, 0.95))
        K = complete_K(k)
        u = float(rng.uniform(-8.0, 8.0))
        a = jacobi_sncndn(u, k)
        b = jacobi_sncndn(u + 4.0 * K, k)
        worst_per = max(worst_per, abs(a.sn - b.sn), abs(a.cn - b.cn),
                        abs(jacobi_sncndn(u + 2.0 * K, k).dn - a.dn))

    k_star = math.sqrt(K_STAR2)
    sn_err = abs(jacobi_sncndn(complete_K(k_star) / 3.0, k_star).sn
                 - (SQRT3 - 1.0))
    ok = worst_add < 1e-10 and worst_per < 1e-11 and sn_err < 1e-12
    _report(8, ok, f"addition worst = {worst_add:.2e}, periods worst = "
                   f"{worst_per:.2e}, sn(K/3) err = {sn_err:.2e}")


def test_criterion_09_choreography():
    residual_star = max_residual_norm(COS15, samples=1024)
    residual_off = max_residual_norm(0.5, samples=64)
    scan = choreography_scan(0.9, 0.99, grid=25, samples=64)
    root_err = abs(scan.root - COS15) if scan.root is not None else math.inf
    ok = residual_star < 1e-10 and residual_off > 1e-3 and root_err < 1e-10
    _report(9, ok, f"residual(k*) = {residual_star:.2e}, residual(0.5) = "
                   f"{residual_off:.2e}, scan root err = {root_err:.2e}")


def test_criterion_10_trisection_bisection():
    worst_f = 0.0
    for k in (0.3, 0.5, SIN15, COS15):
        phi = trisection_amplitude(k)
        worst_f = max(worst_f, abs(incomplete_F(phi, k) - complete_K(k) / 3.0))

    tan_err = abs(math.tan(trisection_amplitude(COS15)) - math.sqrt(2.0 / SQRT3))
    cos_err = abs(math.cos(trisection_amplitude(SIN15))
                  - (2.0 ** (2 / 3) - 1.0) * math.sqrt((2.0 + SQRT3) / SQRT3))

    rng = np.random.default_rng(MC_SEED)
    worst_b = 0.0
    for _ in range(50):
        k = float(rng.uniform(0.05, 0.98))
        theta = float(rng.uniform(0.0, math.pi / 2))
        phi = bisection_amplitude(theta, k)
        worst_b = max(worst_b, abs(incomplete_F(phi, k)
                                   - 0.5 * incomplete_F(theta, k)))
    ok = worst_f < 1e-10 and tan_err < 1e-12 and cos_err < 1e-12 and worst_b < 1e-10
    _report(10, ok, f"trisection F-residual = {worst_f:.2e}, closed forms = "
                    f"{tan_err:.2e}/{cos_err:.2e}, bisection = {worst_b:.2e}")


def test_criterion_11_bowman_and_arc_identity():
    err_a = abs(bowman_integral(math.inf, math.pi / 12) - complete_K(SIN15))
    err_b = abs(bowman_integral(math.inf, 5.0 * math.pi / 12) - complete_K(COS15))
    lhs = adaptive_simpson(
        lambda t: 1.0 / math.sqrt(1.0 - K_STAR2 * math.sin(2.0 * t) ** 2),
        0.0, math.atan(3.0 ** -0.25), tol=1e-12)
    rhs = incomplete_F(math.atan(math.sqrt(2.0) / 3.0 ** 0.25), COS15)
    err_id = abs(lhs - rhs)
    ok = err_a < 1e-9 and err_b < 1e-9 and err_id < 1e-9
    _report(11, ok, f"quartic integrals = {err_a:.2e}/{err_b:.2e}, "
                    f"arc identity = {err_id:.2e}")


def test_criterion_12_random_walk(mc_big):
    p_quad = polya_return_probability()
    p_err = abs(p_quad - 0.3405373296)
    w_closed = SQRT3 / math.pi ** 2 * complete_K(SIN15) ** 2
    w_rel = abs(watson_W() - w_closed) / w_closed
    in_band = 0.33 <= mc_big.p_hat <= 0.345
    # expectation band: p minus the documented O(1e-2) truncation bias
    near_quad = abs(mc_big.p_hat - p_quad) <= 0.01 + 4.0 * mc_big.stderr
    ok = p_err < 1e-8 and w_rel < 1e-6 and in_band and near_quad
    _report(12, ok, f"p err = {p_err:.2e}, W rel = {w_rel:.2e}, "
                    f"p_hat = {mc_big.p_hat:.6f} (band and 4-sigma ok: "
                    f"{in_band}/{near_quad})")


def test_criterion_13_pendulum_renormalization():
    wide = pendulum_period(PendulumSpec(1.0, 5.0 * math.pi / 6))
    narrow = pendulum_period(PendulumSpec(3.0, math.pi / 6))
    rel = abs(wide - narrow) / narrow
    _report(13, rel < 1e-12, f"150 deg vs triple-length 30 deg: rel = {rel:.2e}")


def test_criterion_14_gamma_identities():
    rng = np.random.default_rng(MC_SEED)
    worst_refl = max(
        abs(gamma(x) * gamma(1.0 - x) * math.sin(math.pi * x) - math.pi) / math.pi
        for x in rng.uniform(1e-3, 1.0 - 1e-3, 100))
    worst_dup = 0.0
    for x in rng.uniform(0.1, 5.0, 100):
        lhs = gamma(x) * gamma(x + 0.5)
        rhs = 2.0 ** (1.0 - 2.0 * x) * math.sqrt(math.pi) * gamma(2.0 * x)
        worst_dup = max(worst_dup, abs(lhs - rhs) / abs(rhs))
    spec_dup = abs(gamma(1 / 6) * gamma(2 / 3)
                   - 2.0 ** (2 / 3) * math.sqrt(math.pi) * gamma(1 / 3)) \
        / (gamma(1 / 6) * gamma(2 / 3))
    spec_sq = abs(gamma(1 / 3) ** 2
                  - 2.0 ** (1 / 3) / SQRT3 * math.sqrt(math.pi) * gamma(1 / 6)) \
        / gamma(1 / 3) ** 2
    ok = worst_refl < 1e-12 and worst_dup < 1e-12 and spec_dup < 1e-12 \
        and spec_sq < 1e-12
    _report(14, ok, f"reflection = {worst_refl:.2e}, duplication = "
                    f"{worst_dup:.2e}, specific forms = {spec_dup:.2e}/{spec_sq:.2e}")


def test_criterion_15_verify_exit_contract(mc_big, capsys, tmp_path):
    report = run_verification(mc_walks=MC_WALKS, mc_steps=MC_STEPS, seed=MC_SEED)
    clean = report.failed == 0

    out = tmp_path / "report.jsonl"
    code_ok = main(["verify", "--out", str(out)])
    code_bad = main(["verify", "--out", str(out),
                     "--override", "series_fixed_point=0"])
    capsys.readouterr()
    ok = clean and code_ok == 0 and code_bad != 0
    _report(15, ok, f"default failed = {report.failed}, exit codes = "
                    f"{code_ok}/{code_bad}")
