"""Command-line surface: frequency sweeps, virial diagnostics, Bratu data.

Emits deterministic CSV (default) or JSON tables on stdout.  Exit codes:
0 success, 2 usage error, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import decimal
import io
import json
import sys

import numpy as np

from . import bratu, linearize, oscillator, virial

USAGE_ERROR = 2
NUMERICAL_ERROR = 1


def _format_rows(rows: list[dict], fmt: str) -> str:
    if not rows:
        return ""
    columns = list(rows[0])
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(rows: list[dict], fmt: str) -> None:
    sys.stdout.write(_format_rows(rows, fmt))


def _maybe_plot(path: str | None, title: str, series: dict[str, tuple]) -> None:
    """Write one static plot file; purely presentational."""
    if path is None:
        return
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 5))
    for label, (xs, ys) in series.items():
        ax.plot(xs, ys, label=label)
    ax.set_title(title)
    ax.legend()
    fig.savefig(path)
    plt.close(fig)


def _amplitude_grid(amin: float, amax: float, count: int) -> np.ndarray:
    if amin <= 0.0:
        raise ValueError(f"--amin must be positive, got {amin}")
    if amin > amax:
        raise ValueError(f"--amin {amin} exceeds --amax {amax}")
    if amin == amax:
        return np.array([amin])
    return np.linspace(amin, amax, count)


def cmd_freq(args: argparse.Namespace) -> int:
    try:
        model = oscillator.get_model(args.model)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        amplitudes = _amplitude_grid(args.amin, args.amax, args.count)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    coeff_tol = args.tol if args.tol is not None else linearize.COEFF_REL_TOL
    oracle_tol = args.tol if args.tol is not None else 1e-10
    rows = []
    try:
        for a in amplitudes:
            a = float(a)
            w_cheb = linearize.frequency_chebyshev(model, a, rel_tol=coeff_tol).omega
            w_vir = linearize.frequency_virial_cosine(model, a, rel_tol=coeff_tol).omega
            w_oracle = linearize.frequency_ode_oracle(model, a, rel_tol=oracle_tol).omega
            rows.append(
                {
                    "amplitude": repr(a),
                    "omega_chebyshev": repr(w_cheb),
                    "omega_virial_cosine": repr(w_vir),
                    "omega_oracle": repr(w_oracle),
                    "rel_error": repr(abs(w_cheb - w_oracle) / w_oracle),
                }
            )
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    _emit(rows, args.format)
    amps = [float(r["amplitude"]) for r in rows]
    _maybe_plot(
        args.plot,
        f"amplitude-frequency relation for {args.model}",
        {
            "chebyshev-b1": (amps, [float(r["omega_chebyshev"]) for r in rows]),
            "ode-oracle": (amps, [float(r["omega_oracle"]) for r in rows]),
        },
    )
    return 0


def _parse_moment_range(spec: str) -> list[int]:
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(spec)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad moment range {spec!r}")
    return list(range(lo, hi + 1))


def cmd_virial(args: argparse.Namespace) -> int:
    try:
        model = oscillator.get_model(args.model)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        orders = _parse_moment_range(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    try:
        traj = virial.one_period_trajectory(
            model, args.amplitude, steps_per_period=args.steps_per_period
        )
        tau = oscillator.period_from_trajectory(traj)
        rows = []
        for n in orders:
            rep = virial.hypervirial_residual(traj, model, n, 0.0, tau)
            rows.append(
                {
                    "n": str(n),
                    "lhs": repr(rep.lhs),
                    "rhs": repr(rep.rhs),
                    "boundary": repr(rep.boundary),
                    "residual": repr(rep.residual),
                }
            )
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    _emit(rows, args.format)
    _maybe_plot(
        args.plot,
        f"hypervirial residuals for {args.model} (A={args.amplitude})",
        {"|residual|": (orders, [abs(float(r["residual"])) for r in rows])},
    )
    return 0


def cmd_bratu(args: argparse.Namespace) -> int:
    tags = list(bratu.FAMILY_TAGS) if args.families == "all" else args.families.split(",")
    for tag in tags:
        if tag not in bratu.FAMILY_TAGS:
            print(
                f"error: unknown family {tag!r}; available: "
                f"{', '.join(bratu.FAMILY_TAGS)} (or 'all')",
                file=sys.stderr,
            )
            return USAGE_ERROR
    try:
        branches = bratu.bifurcation_diagram(tags, n_points=args.count)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    rows = [
        {
            "family": p.family,
            "param": repr(p.param),
            "lambda": repr(p.lam),
            "slope0": repr(p.slope0),
        }
        for branch in branches
        for p in branch.points
    ]
    _emit(rows, args.format)
    _maybe_plot(
        args.plot,
        "bifurcation diagram: slope at origin vs lambda",
        {
            b.family: ([p.lam for p in b.points], [p.slope0 for p in b.points])
            for b in branches
        },
    )
    return 0


def _nine_places(value: float) -> str:
    # truncated, not rounded: the published tables keep the first nine
    # decimals of higher-precision values.  A 10-decimal pre-round strips
    # float fuzz (e.g. 3.999999999999xx) before the truncation.
    q = decimal.Decimal(repr(value)).quantize(decimal.Decimal("1.0000000000"))
    return str(q.quantize(decimal.Decimal("1.000000000"), rounding=decimal.ROUND_DOWN))


def cmd_critical(args: argparse.Namespace) -> int:
    exact = bratu.critical_theta()
    poly = bratu.trial_critical_point(bratu.poly_trial())
    sine = bratu.trial_critical_point(bratu.sine_trial())
    rows = [
        {
            "family": name,
            "param_c": _nine_places(cp.param_c),
            "lambda_c": _nine_places(cp.lambda_c),
            "slope0_c": _nine_places(cp.slope0_c),
        }
        for name, cp in (("exact", exact), ("poly-trial", poly), ("sine-trial", sine))
    ]
    _emit(rows, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virlin",
        description=(
            "Amplitude-dependent linearization of conservative nonlinear "
            "oscillators and Bratu bifurcation data."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--plot", metavar="PATH", default=None, help="write a static plot file")

    p_freq = sub.add_parser("freq", help="amplitude-frequency sweep for a force model")
    p_freq.add_argument("--model", required=True)
    p_freq.add_argument("--amin", type=float, default=0.1)
    p_freq.add_argument("--amax", type=float, default=10.0)
    p_freq.add_argument("--count", type=int, default=20)
    p_freq.add_argument("--tol", type=float, default=None, help="override quadrature tolerances")
    add_common(p_freq)
    p_freq.set_defaults(func=cmd_freq)

    p_vir = sub.add_parser("virial", help="hypervirial residuals over one period")
    p_vir.add_argument("--model", required=True)
    p_vir.add_argument("--amplitude", type=float, default=1.0)
    p_vir.add_argument("--n", default="1", help="moment order or range, e.g. 1..3")
    p_vir.add_argument("--steps-per-period", type=int, default=2000)
    add_common(p_vir)
    p_vir.set_defaults(func=cmd_virial)

    p_bratu = sub.add_parser("bratu", help="bifurcation-diagram sweeps")
    p_bratu.add_argument(
        "--families",
        default="all",
        help="comma-separated subset of exact,poly-trial,sine-trial,taylor or 'all'",
    )
    p_bratu.add_argument("--count", type=int, default=200)
    add_common(p_bratu)
    p_bratu.set_defaults(func=cmd_bratu)

    p_crit = sub.add_parser("critical", help="critical constants of the Bratu branches")
    p_crit.add_argument("--format", choices=("csv", "json"), default="csv")
    p_crit.set_defaults(func=cmd_critical)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
