"""Conservative oscillators x'' + f(x) = 0: models, integration, periods.

Force models are restricted to odd f with x*f(x) > 0, which guarantees
bounded oscillation around the origin.  The module provides a reference
RK4 integrator and an energy-integral period oracle that the frequency
approximations elsewhere in the package are judged against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .quadrature import adaptive_gauss_legendre

__all__ = [
    "ForceModel",
    "Trajectory",
    "ModelValidationError",
    "IntegrationError",
    "PeriodDetectionError",
    "validate_model",
    "integrate",
    "exact_period",
    "period_from_trajectory",
    "energy",
    "get_model",
    "registered_models",
]

ODDNESS_TOL = 1e-10


class ModelValidationError(ValueError):
    """The force failed the oddness or x*f(x) > 0 spot checks."""


class PeriodDetectionError(RuntimeError):
    """No full period could be located in the trajectory."""


class IntegrationError(RuntimeError):
    """The integrator produced a non-finite state."""

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class ForceModel:
    """A restoring force f(x), optionally with its potential V (V' = f, V(0)=0).

    The callables should accept numpy arrays; scalar-only callables are
    tolerated but evaluated pointwise where arrays are needed.
    """

    name: str
    force: Callable
    potential: Optional[Callable] = None

    def __call__(self, x):
        return self.force(x)


def _eval_array(func: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate a possibly scalar-only callable on an array."""
    try:
        out = np.asarray(func(x), dtype=float)
        if out.shape == x.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(func(xi)) for xi in x])


def validate_model(model: ForceModel, amplitude: float, n_samples: int = 64) -> None:
    """Spot-check oddness and x*f(x) > 0 on a grid spanning [-A, A].

    Raises ModelValidationError on the first violated sample.
    """
    if amplitude <= 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    x = np.linspace(amplitude / n_samples, amplitude, n_samples)
    f_pos = _eval_array(model.force, x)
    f_neg = _eval_array(model.force, -x)
    scale = max(1.0, float(np.max(np.abs(f_pos))))
    bad = np.abs(f_pos + f_neg) > ODDNESS_TOL * scale
    if np.any(bad):
        xi = x[bad][0]
        raise ModelValidationError(
            f"model {model.name!r} is not odd at x={xi:.6g}: "
            f"f(x)={f_pos[bad][0]:.6g}, f(-x)={f_neg[bad][0]:.6g}"
        )
    bad = x * f_pos <= 0.0
    if np.any(bad):
        xi = x[bad][0]
        raise ModelValidationError(
            f"model {model.name!r} violates x*f(x) > 0 at x={xi:.6g}"
        )


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled (t, x, v) record from integration."""

    t: np.ndarray
    x: np.ndarray
    v: np.ndarray
    dt: float

    def __post_init__(self):
        if not (len(self.t) == len(self.x) == len(self.v)):
            raise ValueError("t, x, v must have equal lengths")
        if len(self.t) < 2:
            raise ValueError("a trajectory needs at least two samples")
        if self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")

    @property
    def duration(self) -> float:
        return float(self.t[-1] - self.t[0])


def integrate(
    model: ForceModel,
    amplitude: float,
    dt: float,
    n_steps: int,
    validate: bool = True,
) -> Trajectory:
    """Classical RK4 for x'' = -f(x) from (x, v) = (A, 0).

    Raises IntegrationError (carrying the step index) if the state stops
    being finite, which is how a too-large dt announces itself.
    """
    if amplitude < 0.0:
        raise ValueError(f"amplitude must be nonnegative, got {amplitude}")
    if dt <= 0.0 or n_steps < 1:
        raise ValueError("need dt > 0 and n_steps >= 1")
    if validate and amplitude > 0.0:
        validate_model(model, amplitude)

    f = model.force
    x = float(amplitude)
    v = 0.0
    xs = np.empty(n_steps + 1)
    vs = np.empty(n_steps + 1)
    xs[0], vs[0] = x, v
    for i in range(1, n_steps + 1):
        try:
            k1x = v
            k1v = -f(x)
            k2x = v + 0.5 * dt * k1v
            k2v = -f(x + 0.5 * dt * k1x)
            k3x = v + 0.5 * dt * k2v
            k3v = -f(x + 0.5 * dt * k2x)
            k4x = v + dt * k3v
            k4v = -f(x + dt * k3x)
            x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
            v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        except OverflowError:
            x = math.inf
        if not (math.isfinite(x) and math.isfinite(v)):
            raise IntegrationError(
                f"state became non-finite at step {i} (t={i * dt:.6g}); "
                "reduce dt or the amplitude",
                step=i,
            )
        xs[i], vs[i] = x, v
    t = dt * np.arange(n_steps + 1)
    return Trajectory(t=t, x=xs, v=vs, dt=dt)


def exact_period(model: ForceModel, amplitude: float, rel_tol: float = 1e-10) -> float:
    """Energy-integral period tau = 4 int_0^A dx / sqrt(2(V(A) - V(x))).

    The substitution x = A sin(phi) removes the inverse-square-root
    endpoint singularity; the transformed integrand extends smoothly to
    phi = pi/2, where its limit is sqrt(A / f(A)).
    """
    if amplitude <= 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    if model.potential is None:
        raise ValueError(f"model {model.name!r} has no potential; exact_period needs one")
    V = model.potential
    v_top = float(V(amplitude))
    xs = np.linspace(0.0, amplitude, 65)[:-1]
    if np.any(_eval_array(V, xs) >= v_top):
        raise ValueError(
            f"potential of {model.name!r} is not increasing up to A={amplitude}"
        )
    limit = math.sqrt(amplitude / float(model.force(amplitude)))

    def integrand(phi: np.ndarray) -> np.ndarray:
        x = amplitude * np.sin(phi)
        gap = v_top - _eval_array(V, x)
        out = np.full_like(gap, limit)
        ok = gap > 0.0
        out[ok] = amplitude * np.cos(phi[ok]) / np.sqrt(2.0 * gap[ok])
        return out

    return 4.0 * adaptive_gauss_legendre(integrand, 0.0, math.pi / 2.0, rel_tol=rel_tol)


def period_from_trajectory(traj: Trajectory) -> float:
    """Time of the first return of v to zero with x > 0.

    The trajectory must start at (A, 0); the crossing is refined by
    linear interpolation between the bracketing samples.
    """
    v, x = traj.v, traj.x
    for k in range(1, len(v)):
        if v[k - 1] > 0.0 and v[k] <= 0.0 and x[k - 1] > 0.0 and x[k] > 0.0:
            s = v[k - 1] / (v[k - 1] - v[k])
            return float(traj.t[k - 1] + s * traj.dt)
    raise PeriodDetectionError(
        "no downward v zero-crossing with x > 0; trajectory shorter than one period?"
    )


def energy(traj: Trajectory, model: ForceModel) -> np.ndarray:
    """Pointwise total energy v^2/2 + V(x) along a trajectory."""
    if model.potential is None:
        raise ValueError(f"model {model.name!r} has no potential")
    return 0.5 * traj.v**2 + _eval_array(model.potential, traj.x)


def _make_linear() -> ForceModel:
    return ForceModel("linear", force=lambda x: x, potential=lambda x: 0.5 * x**2)


def _make_duffing(epsilon: float = 1.0) -> ForceModel:
    return ForceModel(
        "duffing",
        force=lambda x: x + epsilon * x**3,
        potential=lambda x: 0.5 * x**2 + 0.25 * epsilon * x**4,
    )


def _make_cubic() -> ForceModel:
    return ForceModel("cubic", force=lambda x: x**3, potential=lambda x: 0.25 * x**4)


def _make_quintic() -> ForceModel:
    return ForceModel("quintic", force=lambda x: x**5, potential=lambda x: x**6 / 6.0)


def _make_sinh() -> ForceModel:
    return ForceModel("sinh", force=np.sinh, potential=lambda x: np.cosh(x) - 1.0)


_REGISTRY: dict[str, Callable[..., ForceModel]] = {
    "linear": _make_linear,
    "duffing": _make_duffing,
    "cubic": _make_cubic,
    "quintic": _make_quintic,
    "sinh": _make_sinh,
}


def registered_models() -> list[str]:
    return sorted(_REGISTRY)


def get_model(name: str, **params) -> ForceModel:
    """Instantiate a built-in model; duffing accepts epsilon=... ."""
    try:
        factory = _REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"unknown model {name!r}; registered: {', '.join(registered_models())}"
        ) from None
    return factory(**params)
