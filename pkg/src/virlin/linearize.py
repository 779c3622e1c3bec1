"""Amplitude-dependent linearization of a nonlinear restoring force.

Two routes to the same frequency:

* project the force onto the first odd Chebyshev polynomial and read
  off omega(A) = sqrt(b1(A)/A);
* demand that the cosine ansatz A*cos(omega*t) satisfy the virial
  theorem over one period.

Both are computed by Gauss-Chebyshev quadrature, but through separate
code paths: their agreement is a theorem, and the test suite treats it
as one rather than letting the implementation make it a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oscillator import ForceModel, _eval_array, exact_period, validate_model
from .quadrature import gauss_chebyshev_nodes
from .specfun import chebyshev_t

__all__ = [
    "ChebyshevExpansion",
    "FrequencyEstimate",
    "ModelRestrictionError",
    "chebyshev_projection",
    "chebyshev_coefficient",
    "expand_force",
    "frequency_chebyshev",
    "frequency_virial_cosine",
    "frequency_ode_oracle",
    "linearized_period",
]

DEFAULT_NODES = 64
# Node doubling stops once successive estimates agree to this relative level.
COEFF_REL_TOL = 1e-13
_MAX_NODES = 1 << 20


class ModelRestrictionError(ValueError):
    """The computed stiffness b1(A)/A is not positive.

    For a force with x*f(x) > 0 this cannot happen; seeing it means the
    model violates the restriction somewhere the spot checks missed.
    """


@dataclass(frozen=True)
class ChebyshevExpansion:
    """Odd-order Chebyshev coefficients b1, b3, ... of f on [-A, A]."""

    amplitude: float
    coeffs: np.ndarray  # index n holds b_{2n+1}
    n_nodes: int
    reconstruction_error: float  # sup-norm of f - reconstruction on [-A, A]

    @property
    def orders(self) -> np.ndarray:
        return 2 * np.arange(len(self.coeffs)) + 1

    def reconstruct(self, x):
        """Evaluate sum_n b_{2n+1} T_{2n+1}(x/A)."""
        y = np.asarray(x, dtype=float) / self.amplitude
        total = np.zeros_like(y)
        for n, b in enumerate(self.coeffs):
            total += b * chebyshev_t(2 * n + 1, y)
        return total


@dataclass(frozen=True)
class FrequencyEstimate:
    """An amplitude-frequency sample tagged with the method that made it."""

    amplitude: float
    omega: float
    method: str  # chebyshev-b1 | virial-cosine | ode-oracle


def chebyshev_projection(
    model: ForceModel, amplitude: float, order: int, n_nodes: int
) -> float:
    """Projection (2/pi) int_-1^1 (1-y^2)^(-1/2) T_order(y) f(A y) dy.

    Evaluated by M-node Gauss-Chebyshev quadrature (equal weights pi/M),
    exact whenever f is a polynomial of degree < 2M - order.
    """
    if order < 1:
        raise ValueError(f"projection order must be >= 1, got {order}")
    if n_nodes < order + 1:
        raise ValueError(
            f"{n_nodes} nodes cannot resolve order {order}; need at least {order + 1}"
        )
    y = gauss_chebyshev_nodes(n_nodes)
    fy = _eval_array(model.force, amplitude * y)
    return float(2.0 / n_nodes * np.dot(chebyshev_t(order, y), fy))


def chebyshev_coefficient(
    model: ForceModel, amplitude: float, n: int, n_nodes: int = DEFAULT_NODES
) -> float:
    """Coefficient b_{2n+1}(A) of the odd Chebyshev expansion of f."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if amplitude <= 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    if n_nodes < 2 * n + 2:
        raise ValueError(f"n_nodes={n_nodes} too small for order {2 * n + 1}")
    return chebyshev_projection(model, amplitude, 2 * n + 1, n_nodes)


def expand_force(
    model: ForceModel,
    amplitude: float,
    max_order: int,
    n_nodes: int | None = None,
    validate: bool = True,
) -> ChebyshevExpansion:
    """Expand f through b_{2*max_order+1} and report the sup-norm residual."""
    if max_order < 0:
        raise ValueError(f"max_order must be nonnegative, got {max_order}")
    if amplitude <= 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    if n_nodes is None:
        n_nodes = max(DEFAULT_NODES, 2 * max_order + 2)
    if validate:
        validate_model(model, amplitude)

    y = gauss_chebyshev_nodes(n_nodes)
    fy = _eval_array(model.force, amplitude * y)
    coeffs = np.empty(max_order + 1)
    t_prev = np.ones_like(y)
    t_cur = y.copy()
    for order in range(1, 2 * max_order + 2):
        if order % 2 == 1:
            coeffs[(order - 1) // 2] = 2.0 / n_nodes * np.dot(t_cur, fy)
        t_prev, t_cur = t_cur, 2.0 * y * t_cur - t_prev

    grid = np.linspace(-1.0, 1.0, 201)
    approx = np.zeros_like(grid)
    for n, b in enumerate(coeffs):
        approx += b * chebyshev_t(2 * n + 1, grid)
    err = float(np.max(np.abs(_eval_array(model.force, amplitude * grid) - approx)))
    return ChebyshevExpansion(
        amplitude=float(amplitude),
        coeffs=coeffs,
        n_nodes=n_nodes,
        reconstruction_error=err,
    )


def _adaptive_stiffness(integrand_sum, amplitude: float, rel_tol: float) -> float:
    """Double the node count until the summed estimate stabilizes."""
    m = DEFAULT_NODES
    prev = integrand_sum(m)
    while m <= _MAX_NODES:
        m *= 2
        cur = integrand_sum(m)
        if abs(cur - prev) <= rel_tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise RuntimeError(f"stiffness quadrature did not converge for A={amplitude}")


def frequency_chebyshev(
    model: ForceModel,
    amplitude: float,
    rel_tol: float = COEFF_REL_TOL,
    validate: bool = True,
) -> FrequencyEstimate:
    """Frequency omega(A) = sqrt(b1(A)/A) from the first Chebyshev coefficient."""
    if amplitude <= 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    if validate:
        validate_model(model, amplitude)

    def b1_estimate(m: int) -> float:
        y = gauss_chebyshev_nodes(m)
        fy = _eval_array(model.force, amplitude * y)
        return float(2.0 / m * np.dot(chebyshev_t(1, y), fy))

    b1 = _adaptive_stiffness(b1_estimate, amplitude, rel_tol)
    if b1 <= 0.0:
        raise ModelRestrictionError(
            f"b1({amplitude}) = {b1:.6g} <= 0; force violates x*f(x) > 0"
        )
    return FrequencyEstimate(
        amplitude=float(amplitude),
        omega=math.sqrt(b1 / amplitude),
        method="chebyshev-b1",
    )


def frequency_virial_cosine(
    model: ForceModel,
    amplitude: float,
    rel_tol: float = COEFF_REL_TOL,
    validate: bool = True,
) -> FrequencyEstimate:
    """Frequency for which x(t) = A cos(omega t) satisfies the virial theorem.

    omega^2 = (2/(pi A)) int_-1^1 y f(A y) (1-y^2)^(-1/2) dy, evaluated
    directly; no Chebyshev machinery is involved.
    """
    if amplitude <= 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    if validate:
        validate_model(model, amplitude)

    def omega_sq_estimate(m: int) -> float:
        y = gauss_chebyshev_nodes(m)
        fy = _eval_array(model.force, amplitude * y)
        return float(2.0 / (m * amplitude) * np.dot(y, fy))

    omega_sq = _adaptive_stiffness(omega_sq_estimate, amplitude, rel_tol)
    if omega_sq <= 0.0:
        raise ModelRestrictionError(
            f"omega^2({amplitude}) = {omega_sq:.6g} <= 0; force violates x*f(x) > 0"
        )
    return FrequencyEstimate(
        amplitude=float(amplitude),
        omega=math.sqrt(omega_sq),
        method="virial-cosine",
    )


def frequency_ode_oracle(model: ForceModel, amplitude: float, rel_tol: float = 1e-10) -> FrequencyEstimate:
    """Reference frequency 2*pi / tau from the energy-integral period."""
    tau = exact_period(model, amplitude, rel_tol=rel_tol)
    return FrequencyEstimate(
        amplitude=float(amplitude), omega=2.0 * math.pi / tau, method="ode-oracle"
    )


def linearized_period(model: ForceModel, amplitude: float) -> float:
    """2*pi / omega_chebyshev, the step-size yardstick for integration."""
    return 2.0 * math.pi / frequency_chebyshev(model, amplitude).omega
