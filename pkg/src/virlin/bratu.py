"""The Bratu two-point problem u'' + lambda*e^u = 0, u(0) = u(1) = 0.

The exact solution family, its fold (critical point), virial-quotient
branches for one-parameter trial functions with their closed forms, the
Taylor-linearized branch, and bifurcation-diagram sweeps.

The virial quotient used throughout is

    lambda(A) = int_0^1 u'^2 dx / int_0^1 u e^u dx,

the form the n = 1 moment identity takes for f(u) = lambda*e^u with the
homogeneous boundary conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .quadrature import adaptive_gauss_legendre
from .specfun import bessel_i1, erf, struve_l1

__all__ = [
    "BranchPoint",
    "BifurcationBranch",
    "CriticalPoint",
    "TrialFamily",
    "NoSolutionError",
    "exact_u",
    "lambda_of_theta",
    "exact_slope",
    "critical_theta",
    "solve_theta",
    "virial_lambda",
    "poly_trial_lambda",
    "sine_trial_lambda",
    "taylor_solution",
    "taylor_slope",
    "trial_critical_point",
    "bifurcation_diagram",
    "poly_trial",
    "sine_trial",
    "exact_trial",
    "get_family",
    "FAMILY_TAGS",
]

ROOT_TOL = 1e-12
PI_SQ = math.pi**2

# Default sweep window: the exact branch is drawn out to this theta, and
# trial branches run until lambda(A) drops below SWEEP_LAMBDA_FLOOR.
THETA_SWEEP_MAX = 8.0
SWEEP_LAMBDA_FLOOR = 0.5


class NoSolutionError(ValueError):
    """Requested lambda exceeds the fold value lambda_c."""


@dataclass(frozen=True)
class BranchPoint:
    """One (parameter, lambda, slope-at-origin) sample of a solution family."""

    family: str
    param: float
    lam: float
    slope0: float


@dataclass(frozen=True)
class BifurcationBranch:
    """An ordered parametric sweep of one family."""

    family: str
    points: list[BranchPoint]


@dataclass(frozen=True)
class CriticalPoint:
    """Location of the fold: parameter, lambda and slope at their maximum."""

    param_c: float
    lambda_c: float
    slope0_c: float


def _log_cosh(y):
    # overflow-free log(cosh(y))
    ay = np.abs(y)
    return ay + np.log1p(np.exp(-2.0 * ay)) - math.log(2.0)


def exact_u(theta: float, x):
    """Closed-form Bratu solution u(x) = -2 ln[cosh(theta(x-1/2))/cosh(theta/2)].

    Vanishes at x = 0 and x = 1 and peaks at x = 1/2.  Accepts array x.
    """
    if theta <= 0.0:
        raise ValueError(f"theta must be positive, got {theta}")
    x = np.asarray(x, dtype=float)
    u = -2.0 * (_log_cosh(theta * (x - 0.5)) - _log_cosh(theta / 2.0))
    return float(u) if u.ndim == 0 else u


def _exact_u_dx(theta: float, x):
    return -2.0 * theta * np.tanh(theta * (np.asarray(x, dtype=float) - 0.5))


def lambda_of_theta(theta: float) -> float:
    """lambda = 2 theta^2 / cosh(theta/2)^2, the exact branch parametrization."""
    if theta < 0.0:
        raise ValueError(f"theta must be nonnegative, got {theta}")
    c = math.cosh(theta / 2.0)
    return 2.0 * theta * theta / (c * c)


def exact_slope(theta: float) -> float:
    """Slope at the origin u'(0) = 2 theta (e^theta - 1)/(e^theta + 1)."""
    if theta < 0.0:
        raise ValueError(f"theta must be nonnegative, got {theta}")
    # same quantity as 2*theta*tanh(theta/2), which stays finite for large theta
    return 2.0 * theta * math.tanh(theta / 2.0)


def _bisect(g: Callable[[float], float], lo: float, hi: float, tol: float = ROOT_TOL) -> float:
    glo = g(lo)
    ghi = g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if glo * ghi > 0.0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            return mid
        if glo * gm < 0.0:
            hi = mid
        else:
            lo, glo = mid, gm
    return 0.5 * (lo + hi)


@lru_cache(maxsize=1)
def critical_theta() -> CriticalPoint:
    """Fold of the exact branch: root of e^t (t-2) - t - 2 = 0 in [2, 3]."""
    g = lambda t: math.exp(t) * (t - 2.0) - t - 2.0
    assert g(2.0) < 0.0 < g(3.0)
    theta_c = _bisect(g, 2.0, 3.0, tol=1e-15)
    return CriticalPoint(
        param_c=theta_c,
        lambda_c=lambda_of_theta(theta_c),
        slope0_c=exact_slope(theta_c),
    )


def solve_theta(lam: float, branch: str) -> float:
    """Invert lambda(theta) = lam on the requested branch.

    'lower' searches (0, theta_c], 'upper' [theta_c, inf).  Raises
    NoSolutionError for lam beyond the fold.
    """
    if branch not in ("lower", "upper"):
        raise ValueError(f"branch must be 'lower' or 'upper', got {branch!r}")
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")
    crit = critical_theta()
    if lam > crit.lambda_c:
        raise NoSolutionError(
            f"lambda={lam} exceeds the fold value lambda_c={crit.lambda_c:.12g}"
        )
    g = lambda t: lambda_of_theta(t) - lam
    if branch == "lower":
        return _bisect(g, 1e-15, crit.param_c)
    hi = crit.param_c
    while lambda_of_theta(hi) >= lam:
        hi *= 2.0
    return _bisect(g, crit.param_c, hi)


@dataclass(frozen=True)
class TrialFamily:
    """A one-parameter positive trial function meeting u(0) = u(1) = 0.

    u and du_dx map (param, x) -> value with x array-friendly; slope0
    gives u'(0) as a function of the parameter.  Families with a known
    closed-form branch carry it in lambda_closed_form.
    """

    name: str
    u: Callable
    du_dx: Callable
    slope0: Callable[[float], float]
    lambda_closed_form: Optional[Callable[[float], float]] = None


def poly_trial() -> TrialFamily:
    """u(x) = A x (1 - x)."""
    return TrialFamily(
        name="poly-trial",
        u=lambda a, x: a * x * (1.0 - x),
        du_dx=lambda a, x: a * (1.0 - 2.0 * x),
        slope0=lambda a: a,
        lambda_closed_form=poly_trial_lambda,
    )


def sine_trial() -> TrialFamily:
    """u(x) = A sin(pi x)."""
    return TrialFamily(
        name="sine-trial",
        u=lambda a, x: a * np.sin(np.pi * x),
        du_dx=lambda a, x: a * np.pi * np.cos(np.pi * x),
        slope0=lambda a: math.pi * a,
        lambda_closed_form=sine_trial_lambda,
    )


def exact_trial() -> TrialFamily:
    """The exact solution viewed as a trial family parametrized by theta.

    Useful as a consistency check: its virial quotient reproduces
    lambda(theta), and its fold is the exact critical point.
    """
    return TrialFamily(
        name="exact",
        u=exact_u,
        du_dx=_exact_u_dx,
        slope0=exact_slope,
        lambda_closed_form=lambda_of_theta,
    )


def _check_family(family: TrialFamily, a_param: float) -> None:
    ends = np.asarray(family.u(a_param, np.array([0.0, 1.0])), dtype=float)
    if np.max(np.abs(ends)) > 1e-12 * max(1.0, abs(a_param)):
        raise ValueError(f"family {family.name!r} violates u(0) = u(1) = 0 at A={a_param}")
    interior = np.asarray(family.u(a_param, np.linspace(0.05, 0.95, 19)), dtype=float)
    if np.any(interior <= 0.0):
        raise ValueError(f"family {family.name!r} is not positive on (0, 1) at A={a_param}")


def virial_lambda(family: TrialFamily, a_param: float, rel_tol: float = 1e-12) -> float:
    """Virial quotient int u'^2 / int u e^u for one member of a trial family."""
    if a_param <= 0.0:
        raise ValueError(f"trial parameter must be positive, got {a_param}")
    _check_family(family, a_param)
    num = adaptive_gauss_legendre(
        lambda x: family.du_dx(a_param, x) ** 2, 0.0, 1.0, rel_tol=rel_tol
    )
    den = adaptive_gauss_legendre(
        lambda x: family.u(a_param, x) * np.exp(family.u(a_param, x)),
        0.0,
        1.0,
        rel_tol=rel_tol,
    )
    assert den > 0.0, "positive trial functions give a positive denominator"
    return num / den


# Small-A series of D(A) = sqrt(pi) (A-2) e^(A/4) erf(sqrt(A)/2) + 2 sqrt(A):
# D = A^(3/2) * sum_k c_k A^k with c_k = k!/(2k+1)! - 2 (k+1)!/(2k+3)!.
_POLY_SMALL_A = 1e-4
_POLY_D_COEFFS = (2.0 / 3.0, 2.0 / 15.0, 1.0 / 70.0, 1.0 / 945.0)


def poly_trial_lambda(a_param: float) -> float:
    """Closed-form branch for u = A x (1-x):

    lambda = 4 A^(5/2) / (3 [sqrt(pi)(A-2) e^(A/4) erf(sqrt(A)/2) + 2 sqrt(A)]).

    Below A = 1e-4 the bracket is evaluated from its series to dodge the
    0/0 cancellation between the erf term and 2 sqrt(A).
    """
    if a_param <= 0.0:
        raise ValueError(f"trial parameter must be positive, got {a_param}")
    if a_param < _POLY_SMALL_A:
        poly = 0.0
        for c in reversed(_POLY_D_COEFFS):
            poly = poly * a_param + c
        return 4.0 * a_param / (3.0 * poly)
    root_a = math.sqrt(a_param)
    bracket = (
        math.sqrt(math.pi) * (a_param - 2.0) * math.exp(a_param / 4.0) * erf(root_a / 2.0)
        + 2.0 * root_a
    )
    return 4.0 * a_param**2.5 / (3.0 * bracket)


def sine_trial_lambda(a_param: float) -> float:
    """Closed-form branch for u = A sin(pi x):

    lambda = A pi^3 / (2 [2 + pi (I_1(A) + L_1(A))]).
    """
    if a_param <= 0.0:
        raise ValueError(f"trial parameter must be positive, got {a_param}")
    return (
        a_param
        * math.pi**3
        / (2.0 * (2.0 + math.pi * (bessel_i1(a_param) + struve_l1(a_param))))
    )


def taylor_solution(lam: float, x):
    """Solution of the linearized problem u'' + lambda (1 + u) = 0.

    u = cos(sqrt(lam) x) + tan(sqrt(lam)/2) sin(sqrt(lam) x) - 1, valid
    for 0 < lam < pi^2 (the tangent blows up at the linear spectrum).
    """
    if not 0.0 < lam < PI_SQ:
        raise ValueError(f"lambda must lie in (0, pi^2), got {lam}")
    r = math.sqrt(lam)
    x = np.asarray(x, dtype=float)
    u = np.cos(r * x) + math.tan(r / 2.0) * np.sin(r * x) - 1.0
    return float(u) if u.ndim == 0 else u


def taylor_slope(lam: float) -> float:
    """Slope at origin of the Taylor-linearized solution: sqrt(lam) tan(sqrt(lam)/2)."""
    if not 0.0 < lam < PI_SQ:
        raise ValueError(f"lambda must lie in (0, pi^2), got {lam}")
    r = math.sqrt(lam)
    return r * math.tan(r / 2.0)


def _family_lambda(family: TrialFamily) -> Callable[[float], float]:
    if family.lambda_closed_form is not None:
        return family.lambda_closed_form
    return lambda a: virial_lambda(family, a)


def trial_critical_point(
    family: TrialFamily, bracket: tuple[float, float] = (1e-3, 20.0)
) -> CriticalPoint:
    """Locate the fold of a trial family's lambda(A) branch.

    Golden-section maximization down to |delta lambda| < 1e-12, then a
    bisection polish on the central-difference slope; the polish is what
    pushes the abscissa from ~1e-6 to ~1e-9 accuracy, which the quoted
    critical slopes need.  The branch is required to be unimodal on the
    bracket (checked by coarse sampling).
    """
    lam = _family_lambda(family)
    lo, hi = bracket

    grid = np.linspace(lo, hi, 64)
    values = [lam(float(a)) for a in grid]
    peak = int(np.argmax(values))
    rising = all(values[i] < values[i + 1] for i in range(peak))
    falling = all(values[i] > values[i + 1] for i in range(peak, len(values) - 1))
    if not (rising and falling) or peak in (0, len(values) - 1):
        raise ValueError(
            f"lambda(A) of {family.name!r} is not unimodal inside ({lo}, {hi})"
        )

    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1, f2 = lam(x1), lam(x2)
    while abs(f1 - f2) > 1e-12 and hi - lo > 1e-10:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = lam(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = lam(x1)
    a_best = 0.5 * (lo + hi)

    # polish: bisect the sign change of the symmetric difference quotient
    h = 1e-5
    slope = lambda a: lam(a + h) - lam(a - h)
    lo_p, hi_p = a_best - 64.0 * h, a_best + 64.0 * h
    lo_p = max(lo_p, bracket[0] + h)
    if slope(lo_p) > 0.0 > slope(hi_p):
        a_best = _bisect(slope, lo_p, hi_p, tol=1e-13)

    return CriticalPoint(
        param_c=a_best, lambda_c=lam(a_best), slope0_c=float(family.slope0(a_best))
    )


FAMILY_TAGS = ("exact", "poly-trial", "sine-trial", "taylor")


def get_family(tag: str) -> TrialFamily:
    """Built-in trial families by tag ('taylor' is not amplitude-parametrized)."""
    factories = {"exact": exact_trial, "poly-trial": poly_trial, "sine-trial": sine_trial}
    try:
        return factories[tag]()
    except KeyError:
        raise KeyError(
            f"unknown family {tag!r}; available: {', '.join(sorted(factories))}"
        ) from None


def _grid_through_fold(lo: float, fold: float, hi: float, n: int) -> np.ndarray:
    """n ordered points from lo to hi guaranteed to contain the fold."""
    k = max(2, (n + 1) // 2)
    lower = np.linspace(lo, fold, k)
    upper = np.linspace(fold, hi, n - k + 1)[1:]
    return np.concatenate([lower, upper])


def _sweep_upper_param(lam: Callable[[float], float], start: float) -> float:
    a = start
    while lam(a) >= SWEEP_LAMBDA_FLOOR:
        a *= 1.25
    return a


def bifurcation_diagram(families: list[str], n_points: int = 200) -> list[BifurcationBranch]:
    """Parametric (lambda, u'(0)) sweeps for the requested families.

    Every sweep passes through its fold where one exists; the Taylor
    branch is swept in lambda over (0, lambda_c] and has no fold.
    """
    if n_points < 2:
        raise ValueError(f"need at least two points per branch, got {n_points}")
    crit = critical_theta()
    branches = []
    for tag in families:
        if tag == "taylor":
            lam_max = min(crit.lambda_c, PI_SQ)
            lams = np.linspace(lam_max / n_points, lam_max, n_points)
            points = [
                BranchPoint(family=tag, param=float(l), lam=float(l), slope0=taylor_slope(float(l)))
                for l in lams
            ]
        elif tag == "exact":
            thetas = _grid_through_fold(0.0, crit.param_c, THETA_SWEEP_MAX, n_points)
            points = [
                BranchPoint(
                    family=tag,
                    param=float(t),
                    lam=lambda_of_theta(float(t)),
                    slope0=exact_slope(float(t)),
                )
                for t in thetas
            ]
        elif tag in ("poly-trial", "sine-trial"):
            family = get_family(tag)
            lam = _family_lambda(family)
            fold = trial_critical_point(family)
            a_hi = _sweep_upper_param(lam, fold.param_c)
            grid = _grid_through_fold(0.0, fold.param_c, a_hi, n_points)
            points = [
                BranchPoint(
                    family=tag,
                    param=float(a),
                    lam=lam(float(a)) if a > 0.0 else 0.0,
                    slope0=float(family.slope0(float(a))),
                )
                for a in grid
            ]
        else:
            raise KeyError(
                f"unknown family {tag!r}; available: {', '.join(FAMILY_TAGS)}"
            )
        branches.append(BifurcationBranch(family=tag, points=points))
    return branches
