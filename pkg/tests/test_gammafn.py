import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singmod.errors import DomainError
from singmod.gammafn import beta, gamma, log_gamma
from singmod.quadrature import gauss_legendre_points, tanh_sinh_points


def gamma_defining_integral(x: float) -> float:
    """Independent oracle: quadrature of int_0^inf t^(x-1) e^(-t) dt.

    tanh-sinh absorbs the t^(x-1) endpoint singularity on [0, 1]; the tail
    is smooth and truncated where the integrand is below 1e-30.
    """
    t, w = tanh_sinh_points(0.0, 1.0, nodes=161)
    head = float(np.sum(w * t ** (x - 1.0) * np.exp(-t)))
    upper = max(60.0, x + 40.0 * math.sqrt(x) + 40.0)
    t, w = gauss_legendre_points(1.0, upper, nodes=64, panels=16)
    tail = float(np.sum(w * t ** (x - 1.0) * np.exp(-t)))
    return head + tail


@pytest.mark.parametrize("x", [1 / 3, 1 / 2, 5 / 6, 1.0, 1.5, 2.5, 5.0, 10.0, 25.0])
def test_matches_defining_integral(x):
    assert gamma(x) == pytest.approx(gamma_defining_integral(x), rel=1e-8)


def test_classical_values():
    assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(10.0) == pytest.approx(362880.0, rel=1e-13)  # 9!
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-14)


def test_gamma_third_relation():
    # Gamma(1/3)^2 = (2^(1/3)/sqrt(3)) sqrt(pi) Gamma(1/6); both sides evaluated
    lhs = gamma(1 / 3) ** 2
    rhs = 2.0 ** (1 / 3) / math.sqrt(3.0) * math.sqrt(math.pi) * gamma(1 / 6)
    assert lhs == pytest.approx(rhs, rel=1e-13)


def test_log_gamma_consistent_with_gamma():
    for x in [1e-3, 0.1, 0.7, 3.0, 20.0, 50.0]:
        assert math.exp(log_gamma(x)) == pytest.approx(gamma(x), rel=1e-12)


def test_log_gamma_beyond_overflow():
    # gamma(200) overflows nothing in log space
    assert log_gamma(200.0) == pytest.approx(857.9336698258574, rel=1e-13)


@given(st.floats(min_value=0.5, max_value=30.0))
@settings(max_examples=80, deadline=None)
def test_recurrence(x):
    assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


@given(st.floats(min_value=1e-3, max_value=1.0 - 1e-3))
@settings(max_examples=80, deadline=None)
def test_reflection(x):
    assert gamma(x) * gamma(1.0 - x) * math.sin(math.pi * x) == pytest.approx(
        math.pi, rel=1e-12)


def test_duplication_legendre():
    lhs = gamma(1 / 6) * gamma(2 / 3)
    rhs = 2.0 ** (2 / 3) * math.sqrt(math.pi) * gamma(1 / 3)
    assert lhs == pytest.approx(rhs, rel=1e-13)
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.1, 5.0, 50):
        lhs = gamma(x) * gamma(x + 0.5)
        rhs = 2.0 ** (1.0 - 2.0 * x) * math.sqrt(math.pi) * gamma(2.0 * x)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_beta_trivial_and_halves():
    assert beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)
    assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)


def test_beta_symmetry_and_recurrence():
    assert beta(1 / 3, 2 / 3) == pytest.approx(beta(2 / 3, 1 / 3), rel=1e-14)
    # B(x, y+1) = B(x, y) * y/(x+y)
    x, y = 0.7, 1.9
    assert beta(x, y + 1.0) == pytest.approx(beta(x, y) * y / (x + y), rel=1e-13)


@pytest.mark.parametrize("x", [1 / 3, 1 / 2, 2 / 3, 1.0])
@pytest.mark.parametrize("y", [1 / 3, 1 / 2, 2 / 3, 1.0])
def test_beta_against_quadrature(x, y):
    t, w = tanh_sinh_points(0.0, 0.5, nodes=141)
    first = float(np.sum(w * t ** (x - 1.0) * (1.0 - t) ** (y - 1.0)))
    second = float(np.sum(w * t ** (y - 1.0) * (1.0 - t) ** (x - 1.0)))
    assert beta(x, y) == pytest.approx(first + second, rel=1e-8)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        gamma(bad)
    with pytest.raises(DomainError):
        log_gamma(bad)
    with pytest.raises(DomainError):
        beta(bad, 1.0)
    with pytest.raises(DomainError):
        beta(1.0, bad)
