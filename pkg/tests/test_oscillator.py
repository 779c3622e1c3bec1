"""Force models, RK4 integration, and the period oracles."""

import math

import numpy as np
import pytest

from virlin.oscillator import (
    ForceModel,
    IntegrationError,
    ModelValidationError,
    PeriodDetectionError,
    Trajectory,
    energy,
    exact_period,
    get_model,
    integrate,
    period_from_trajectory,
    registered_models,
    validate_model,
)

TWO_PI = 2.0 * math.pi
# 4*sqrt(2) * int_0^1 dy/sqrt(1-y^4), frozen from 40-digit quadrature
TAU_CUBIC_A1 = 7.416298709205488


class TestRegistry:
    def test_expected_models_present(self):
        assert registered_models() == ["cubic", "duffing", "linear", "quintic", "sinh"]

    def test_unknown_name(self):
        with pytest.raises(KeyError, match="registered"):
            get_model("vanderpol")

    def test_duffing_epsilon_configurable(self):
        model = get_model("duffing", epsilon=0.5)
        assert model.force(2.0) == pytest.approx(2.0 + 0.5 * 8.0)

    @pytest.mark.parametrize("name", ["cubic", "duffing", "linear", "quintic", "sinh"])
    def test_potential_consistent_with_force(self, name):
        # central difference of V reproduces f
        model = get_model(name)
        h = 1e-6
        for x in (0.3, 0.9, 1.7):
            dv = (model.potential(x + h) - model.potential(x - h)) / (2 * h)
            assert dv == pytest.approx(model.force(x), rel=1e-8)
        assert model.potential(0.0) == pytest.approx(0.0, abs=1e-15)


class TestValidation:
    def test_registered_models_pass(self):
        for name in registered_models():
            validate_model(get_model(name), amplitude=2.0)

    def test_even_force_rejected(self):
        bad = ForceModel("even", force=lambda x: x**2)
        with pytest.raises(ModelValidationError, match="not odd"):
            validate_model(bad, amplitude=1.0)

    def test_repelling_force_rejected(self):
        bad = ForceModel("repel", force=lambda x: -x)
        with pytest.raises(ModelValidationError, match="x\\*f"):
            validate_model(bad, amplitude=1.0)

    def test_validation_runs_inside_integrate(self):
        bad = ForceModel("even", force=lambda x: x**2)
        with pytest.raises(ModelValidationError):
            integrate(bad, 1.0, 0.01, 10)


class TestIntegrate:
    def test_harmonic_closes_after_one_period(self):
        traj = integrate(get_model("linear"), 1.0, TWO_PI / 2000, 2000)
        assert traj.x[-1] == pytest.approx(1.0, abs=1e-6)
        assert traj.v[-1] == pytest.approx(0.0, abs=1e-6)

    def test_cubic_closes_after_oracle_period(self):
        model = get_model("cubic")
        tau = exact_period(model, 1.0)
        traj = integrate(model, 1.0, tau / 2000, 2000)
        assert traj.x[-1] == pytest.approx(1.0, abs=1e-5)
        assert traj.v[-1] == pytest.approx(0.0, abs=1e-5)

    def test_zero_amplitude_stays_at_equilibrium(self):
        traj = integrate(get_model("duffing"), 0.0, 0.01, 200)
        assert np.all(traj.x == 0.0)
        assert np.all(traj.v == 0.0)

    def test_half_period_reflection(self):
        # odd force: x(tau/2) = -A
        model = get_model("duffing")
        tau = exact_period(model, 1.0)
        traj = integrate(model, 1.0, tau / 4000, 2000)
        assert traj.x[-1] == pytest.approx(-1.0, abs=1e-6)

    def test_unstable_step_raises_with_step_index(self):
        with pytest.raises(IntegrationError) as info:
            integrate(get_model("duffing"), 10.0, 1.0, 10_000)
        assert info.value.step >= 1

    def test_energy_drift_below_1e8_for_all_models(self):
        for name in registered_models():
            model = get_model(name)
            tau = exact_period(model, 1.0)
            traj = integrate(model, 1.0, tau / 2000, 2000)
            e = energy(traj, model)
            drift = np.max(np.abs(e - e[0])) / e[0]
            assert drift < 1e-8, f"{name}: relative energy drift {drift:.3e}"

    def test_bad_arguments(self):
        model = get_model("linear")
        with pytest.raises(ValueError):
            integrate(model, -1.0, 0.01, 10)
        with pytest.raises(ValueError):
            integrate(model, 1.0, -0.01, 10)
        with pytest.raises(ValueError):
            integrate(model, 1.0, 0.01, 0)


class TestTrajectory:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            Trajectory(t=np.arange(3.0), x=np.zeros(2), v=np.zeros(3), dt=1.0)

    def test_too_short(self):
        with pytest.raises(ValueError):
            Trajectory(t=np.zeros(1), x=np.zeros(1), v=np.zeros(1), dt=1.0)


class TestExactPeriod:
    def test_harmonic_amplitude_independent(self):
        model = get_model("linear")
        for a in (0.01, 1.0, 3.0, 10.0):
            assert exact_period(model, a) == pytest.approx(TWO_PI, rel=1e-10)

    def test_cubic_reference_value(self):
        assert exact_period(get_model("cubic"), 1.0) == pytest.approx(
            TAU_CUBIC_A1, rel=1e-8
        )

    def test_cubic_scales_inversely_with_amplitude(self):
        model = get_model("cubic")
        assert exact_period(model, 2.0) == pytest.approx(TAU_CUBIC_A1 / 2.0, rel=1e-9)

    def test_duffing_small_amplitude_limit(self):
        assert exact_period(get_model("duffing"), 1e-5) == pytest.approx(TWO_PI, rel=1e-8)

    def test_requires_potential(self):
        bare = ForceModel("bare", force=lambda x: x)
        with pytest.raises(ValueError, match="potential"):
            exact_period(bare, 1.0)

    def test_rejects_nonmonotone_potential(self):
        # potential with an interior hump higher than V(A)
        trick = ForceModel(
            "hump",
            force=lambda x: x,
            potential=lambda x: np.sin(3.0 * x),
        )
        with pytest.raises(ValueError, match="not increasing"):
            exact_period(trick, 2.0)

    def test_rejects_nonpositive_amplitude(self):
        with pytest.raises(ValueError):
            exact_period(get_model("linear"), 0.0)


class TestPeriodFromTrajectory:
    def test_harmonic(self):
        traj = integrate(get_model("linear"), 1.0, TWO_PI / 2000, 2500)
        assert period_from_trajectory(traj) == pytest.approx(TWO_PI, abs=1e-5)

    def test_cubic_against_oracle(self):
        model = get_model("cubic")
        traj = integrate(model, 1.0, TAU_CUBIC_A1 / 2000, 2500)
        assert period_from_trajectory(traj) == pytest.approx(TAU_CUBIC_A1, abs=1e-3)

    def test_too_short_trajectory_raises(self):
        traj = integrate(get_model("linear"), 1.0, TWO_PI / 2000, 900)
        with pytest.raises(PeriodDetectionError):
            period_from_trajectory(traj)

    @pytest.mark.parametrize("name", ["linear", "duffing", "cubic", "sinh"])
    def test_oracle_agreement_within_1e4(self, name):
        model = get_model(name)
        tau = exact_period(model, 1.0)
        traj = integrate(model, 1.0, tau / 2000, 2400)
        detected = period_from_trajectory(traj)
        assert abs(detected - tau) / tau < 1e-4
