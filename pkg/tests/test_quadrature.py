"""Quadrature helper checks against closed-form integrals."""

import math

import numpy as np
import pytest

from virlin.quadrature import (
    QuadratureError,
    adaptive_gauss_legendre,
    gauss_chebyshev_nodes,
    gauss_legendre,
    simpson_uniform,
)


def test_gauss_legendre_polynomial_exactness():
    # n nodes integrate degree 2n-1 exactly
    val = gauss_legendre(lambda x: x**5 - 2 * x**3 + x, 0.0, 2.0, n=3)
    exact = 2.0**6 / 6 - 2 * 2.0**4 / 4 + 2.0
    assert val == pytest.approx(exact, rel=1e-14)


def test_adaptive_gauss_legendre_smooth():
    val = adaptive_gauss_legendre(np.exp, 0.0, 1.0, rel_tol=1e-13)
    assert val == pytest.approx(math.e - 1.0, rel=1e-13)


def test_adaptive_gauss_legendre_peaked():
    # sharp but integrable bump; forces several doublings
    val = adaptive_gauss_legendre(
        lambda x: 1.0 / (1e-4 + (x - 0.5) ** 2), 0.0, 1.0, rel_tol=1e-12
    )
    exact = 2.0 / 1e-2 * math.atan(0.5 / 1e-2)
    assert val == pytest.approx(exact, rel=1e-11)


def test_adaptive_gauss_legendre_raises_on_budget():
    rng = np.random.default_rng(7)

    def noisy(x):
        return rng.standard_normal(np.shape(x))

    with pytest.raises(QuadratureError):
        adaptive_gauss_legendre(noisy, 0.0, 1.0, rel_tol=1e-14, n_max=64)


def test_gauss_chebyshev_nodes_integrate_weighted_polynomials():
    # int_-1^1 y^2 (1-y^2)^(-1/2) dy = pi/2
    y = gauss_chebyshev_nodes(16)
    w = math.pi / 16
    assert w * np.sum(y**2) == pytest.approx(math.pi / 2, rel=1e-14)


def test_gauss_chebyshev_rejects_zero_nodes():
    with pytest.raises(ValueError):
        gauss_chebyshev_nodes(0)


class TestSimpson:
    def test_quadratic_exact_even_intervals(self):
        t = np.linspace(0.0, 2.0, 11)
        assert simpson_uniform(t**2, t[1] - t[0]) == pytest.approx(8.0 / 3.0, rel=1e-14)

    def test_odd_interval_count_uses_trapezoid_tail(self):
        t = np.linspace(0.0, 1.0, 10)  # 9 intervals
        val = simpson_uniform(t**2, t[1] - t[0])
        assert val == pytest.approx(1.0 / 3.0, abs=1e-3)

    def test_single_interval(self):
        assert simpson_uniform(np.array([1.0, 3.0]), 0.5) == pytest.approx(1.0)

    def test_degenerate(self):
        assert simpson_uniform(np.array([4.0]), 0.1) == 0.0

    def test_periodic_integrand_converges_fast(self):
        n = 64
        t = np.linspace(0.0, 2 * math.pi, n + 1)
        assert simpson_uniform(np.sin(t) ** 2, t[1] - t[0]) == pytest.approx(
            math.pi, abs=1e-12
        )
