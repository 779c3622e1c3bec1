"""Quadrature building blocks: Gauss-Legendre, Gauss-Chebyshev, Simpson.

The Gauss rules take vectorized integrands (callables mapping an ndarray
of abscissas to an ndarray of values); node tables are cached per order.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "QuadratureError",
    "gauss_legendre",
    "adaptive_gauss_legendre",
    "gauss_chebyshev_nodes",
    "simpson_uniform",
]


class QuadratureError(RuntimeError):
    """Adaptive refinement ran out of nodes before meeting its tolerance."""


@lru_cache(maxsize=32)
def _leggauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def gauss_legendre(f, a: float, b: float, n: int) -> float:
    """n-node Gauss-Legendre estimate of the integral of f over [a, b]."""
    x, w = _leggauss(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return float(half * np.dot(w, f(mid + half * x)))


def adaptive_gauss_legendre(
    f,
    a: float,
    b: float,
    rel_tol: float = 1e-12,
    n_start: int = 16,
    n_max: int = 8192,
) -> float:
    """Gauss-Legendre with node doubling until two estimates agree.

    Convergence means |I_2n - I_n| <= rel_tol * max(|I_2n|, 1e-300);
    smooth integrands converge geometrically, so the doubling is cheap.
    """
    n = n_start
    prev = gauss_legendre(f, a, b, n)
    while n <= n_max:
        n *= 2
        cur = gauss_legendre(f, a, b, n)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300):
            return cur
        prev = cur
    raise QuadratureError(
        f"Gauss-Legendre did not reach rel_tol={rel_tol} within {n_max} nodes"
    )


def gauss_chebyshev_nodes(m: int) -> np.ndarray:
    """Nodes cos((2k-1)pi/2m), k=1..m, for the weight (1-y^2)^(-1/2).

    Every node carries the equal weight pi/m; the rule is exact for
    polynomial integrands of degree < 2m against this weight.
    """
    if m < 1:
        raise ValueError(f"need at least one node, got {m}")
    k = np.arange(1, m + 1)
    return np.cos((2 * k - 1) * np.pi / (2 * m))


def simpson_uniform(y: np.ndarray, dt: float) -> float:
    """Composite Simpson on uniformly spaced samples.

    With an odd number of intervals the last cell falls back to the
    trapezoid rule.
    """
    y = np.asarray(y, dtype=float)
    n = y.size - 1  # number of intervals
    if n < 1:
        return 0.0
    if n == 1:
        return float(0.5 * dt * (y[0] + y[1]))
    total = 0.0
    m = n if n % 2 == 0 else n - 1
    total += dt / 3.0 * (y[0] + 4.0 * np.sum(y[1:m:2]) + 2.0 * np.sum(y[2:m:2]) + y[m])
    if m != n:
        total += 0.5 * dt * (y[n - 1] + y[n])
    return float(total)
