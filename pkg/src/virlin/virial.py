"""Hypervirial and virial residuals evaluated on sampled trajectories.

For motion obeying x'' + f(x) = 0, integrating d/dt(x^n v) gives

    n int_a^b x^(n-1) v^2 dt = int_a^b x^n f dt + x(b)^n v(b) - x(a)^n v(a)

for every n >= 1.  Exact trajectories satisfy this identically, so the
residual of the sampled version is a direct measure of discretization
error; n = 1 over a full period is the classical virial theorem
2*<K> = <x f>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linearize import linearized_period
from .oscillator import ForceModel, Trajectory, _eval_array, integrate, period_from_trajectory
from .quadrature import simpson_uniform

__all__ = ["VirialReport", "hypervirial_residual", "virial_check", "one_period_trajectory"]


@dataclass(frozen=True)
class VirialReport:
    """Both sides of the moment identity on [a, b], plus their mismatch.

    lhs      n * int x^(n-1) v^2 dt
    rhs      int x^n f dt + boundary
    boundary x(b)^n v(b) - x(a)^n v(a)
    residual lhs - rhs

    For full-period checks the period-mean kinetic energy <K> and virial
    <x f> are filled in as well.
    """

    n: int
    a: float
    b: float
    lhs: float
    rhs: float
    boundary: float
    residual: float
    mean_kinetic: Optional[float] = None
    mean_virial: Optional[float] = None
    period: Optional[float] = None


def _interp_state(traj: Trajectory, t: float) -> tuple[float, float]:
    """Linearly interpolated (x, v) at time t."""
    s = (t - float(traj.t[0])) / traj.dt
    k = min(int(math.floor(s)), len(traj.t) - 2)
    k = max(k, 0)
    w = s - k
    x = (1.0 - w) * traj.x[k] + w * traj.x[k + 1]
    v = (1.0 - w) * traj.v[k] + w * traj.v[k + 1]
    return float(x), float(v)


def _window_integral(traj: Trajectory, samples: np.ndarray, a: float, b: float) -> float:
    """Integrate sampled values over [a, b] on the trajectory grid.

    Full grid cells get composite Simpson; the partial cells at either
    end use the trapezoid rule on linearly interpolated values.
    """
    t0 = float(traj.t[0])
    dt = traj.dt
    # fuzz absorbs roundoff when a or b sits on a grid point
    fuzz = 1e-9 * dt
    ia = int(math.ceil((a - t0) / dt - fuzz))
    ib = int(math.floor((b - t0) / dt + fuzz))
    ia = max(ia, 0)
    ib = min(ib, len(samples) - 1)
    if ia > ib:
        # both endpoints inside one cell
        ga = np.interp(a, traj.t, samples)
        gb = np.interp(b, traj.t, samples)
        return float(0.5 * (b - a) * (ga + gb))
    total = simpson_uniform(samples[ia : ib + 1], dt)
    ta = t0 + ia * dt
    if a < ta - fuzz:
        ga = np.interp(a, traj.t, samples)
        total += 0.5 * (ta - a) * (ga + samples[ia])
    tb = t0 + ib * dt
    if b > tb + fuzz:
        gb = np.interp(b, traj.t, samples)
        total += 0.5 * (b - tb) * (samples[ib] + gb)
    return float(total)


def hypervirial_residual(
    traj: Trajectory, model: ForceModel, n: int, a: float, b: float
) -> VirialReport:
    """Evaluate the order-n moment identity on the window [a, b]."""
    if n < 1:
        raise ValueError(f"moment order must be >= 1, got {n}")
    t0, t1 = float(traj.t[0]), float(traj.t[-1])
    fuzz = 1e-9 * traj.dt
    if a < t0 - fuzz or b > t1 + fuzz or a >= b:
        raise ValueError(f"window [{a}, {b}] not inside trajectory span [{t0}, {t1}]")

    fx = _eval_array(model.force, traj.x)
    lhs_samples = n * traj.x ** (n - 1) * traj.v**2
    rhs_samples = traj.x**n * fx

    lhs = _window_integral(traj, lhs_samples, a, b)
    integral_rhs = _window_integral(traj, rhs_samples, a, b)
    xa, va = _interp_state(traj, a)
    xb, vb = _interp_state(traj, b)
    boundary = xb**n * vb - xa**n * va
    rhs = integral_rhs + boundary
    return VirialReport(
        n=n, a=a, b=b, lhs=lhs, rhs=rhs, boundary=boundary, residual=lhs - rhs
    )


def virial_check(traj: Trajectory, model: ForceModel) -> VirialReport:
    """n = 1 identity over one detected period, with the period means.

    The trajectory must start at (A, 0) and span at least one period.
    """
    tau = period_from_trajectory(traj)
    report = hypervirial_residual(traj, model, 1, float(traj.t[0]), float(traj.t[0]) + tau)
    mean_kinetic = report.lhs / (2.0 * tau)
    mean_virial = (report.rhs - report.boundary) / tau
    return VirialReport(
        n=report.n,
        a=report.a,
        b=report.b,
        lhs=report.lhs,
        rhs=report.rhs,
        boundary=report.boundary,
        residual=report.residual,
        mean_kinetic=mean_kinetic,
        mean_virial=mean_virial,
        period=tau,
    )


def one_period_trajectory(
    model: ForceModel,
    amplitude: float,
    steps_per_period: int = 2000,
    n_periods: float = 1.25,
) -> Trajectory:
    """Integrate a bit more than one period, dt set by the linearized frequency."""
    tau_est = linearized_period(model, amplitude)
    dt = tau_est / steps_per_period
    n_steps = int(math.ceil(n_periods * steps_per_period))
    return integrate(model, amplitude, dt, n_steps)
