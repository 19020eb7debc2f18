import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optocorr import (
    ReducedParams,
    Subsystem,
    beta0_mechanical,
    beta0_optical,
    extract_subsystem,
    global_covariance,
    log_negativity,
    mean_thermal_occupation,
    simon_precondition,
    t0_mechanical,
    t0_optical,
)
from optocorr.measures import closed_form_eta_mm, closed_form_eta_oo
from optocorr.sweep import brute_force_beta0, brute_force_t0

OMEGA_M = 2 * math.pi * 947e3


class TestTemperatureThresholds:
    def test_mechanical_reference(self):
        res = t0_mechanical(0.05, 34.0, 1.0)
        assert res.attainable
        assert res.value == pytest.approx(2.650082951e-4, rel=1e-9)

    def test_optical_reference(self):
        res = t0_optical(0.05, 34.0, 1.0)
        assert res.attainable
        assert res.value == pytest.approx(4.274379439e-4, rel=1e-9)

    def test_no_squeezing_unattainable(self):
        res = t0_mechanical(0.05, 34.0, 0.0)
        assert not res.attainable and res.value is None
        res = t0_optical(0.05, 34.0, 0.0)
        assert not res.attainable and res.value is None

    def test_no_pump_mechanical_unattainable(self):
        res = t0_mechanical(0.05, 0.0, 1.0)
        assert not res.attainable and res.value is None

    def test_no_pump_optical_always_entangled(self):
        res = t0_optical(0.05, 0.0, 1.0)
        assert res.attainable and res.value == math.inf

    def test_large_squeezing_limits(self):
        # saturation values of the two formulas as 1 - e^{-2r} -> 1
        mech = t0_mechanical(0.05, 34.0, 50.0)
        opt = t0_optical(0.05, 34.0, 50.0)
        assert mech.value == pytest.approx(3.031131601e-4, rel=1e-9)
        assert opt.value == pytest.approx(4.90897804e-4, rel=1e-9)

    def test_optical_outlasts_mechanical_in_temperature(self):
        for r in np.linspace(0.05, 5.0, 25):
            mech = t0_mechanical(0.05, 34.0, r)
            opt = t0_optical(0.05, 34.0, r)
            assert opt.value > mech.value

    @settings(max_examples=40)
    @given(
        st.floats(min_value=1e-3, max_value=1.0),
        st.floats(min_value=0.1, max_value=100.0),
        st.floats(min_value=0.05, max_value=3.0),
    )
    def test_thresholds_are_level_sets(self, alpha, beta, r):
        # at T0 the corresponding 2 eta- equals 1 exactly
        mech = t0_mechanical(alpha, beta, r)
        n_at = mean_thermal_occupation(OMEGA_M, mech.value)
        p = ReducedParams(alpha=alpha, beta=beta, r=r, n_th=n_at)
        assert 2 * closed_form_eta_mm(p) == pytest.approx(1.0, rel=1e-9)

        opt = t0_optical(alpha, beta, r)
        n_at = mean_thermal_occupation(OMEGA_M, opt.value)
        p = ReducedParams(alpha=alpha, beta=beta, r=r, n_th=n_at)
        assert 2 * closed_form_eta_oo(p) == pytest.approx(1.0, rel=1e-9)


class TestCooperativityThresholds:
    def test_mechanical_reference(self):
        res = beta0_mechanical(0.01, 2.0, 10.0)
        assert res.attainable
        assert res.value == pytest.approx(25.84163251, rel=1e-9)

    def test_mechanical_outside_plot_range(self):
        res = beta0_mechanical(0.01, 2.0, 25.0)
        assert res.attainable
        assert res.value == pytest.approx(104.8404393, rel=1e-9)
        assert res.value > 100.0

    def test_optical_reference(self):
        res = beta0_optical(0.01, 2.0, 60.0)
        assert res.attainable
        assert res.value == pytest.approx(4.541594958, rel=1e-9)

    def test_cold_mechanical_threshold_zero(self):
        res = beta0_mechanical(0.3, 1.0, 0.0)
        assert res.attainable and res.value == 0.0

    def test_hot_mechanical_unattainable(self):
        res = beta0_mechanical(0.5, 0.5, 10.0)   # 2 alpha n_th > 1 - e^{-2r}
        assert not res.attainable and res.value is None

    def test_optical_entangled_for_all_beta(self):
        res = beta0_optical(0.01, 2.0, 10.0)     # 2 alpha n_th < 1 - e^{-2r}
        assert res.attainable and res.value == math.inf

    def test_optical_no_squeezing_never_entangled(self):
        res = beta0_optical(0.3, 0.0, 5.0)
        assert not res.attainable and res.value is None

    @settings(max_examples=40)
    @given(
        st.floats(min_value=1e-3, max_value=1.0),
        st.floats(min_value=0.05, max_value=3.0),
        st.floats(min_value=0.0, max_value=100.0),
    )
    def test_thresholds_are_level_sets(self, alpha, r, n_th):
        mech = beta0_mechanical(alpha, r, n_th)
        if mech.attainable and 0.0 < mech.value < 1e6:
            p = ReducedParams(alpha=alpha, beta=mech.value, r=r, n_th=n_th)
            assert 2 * closed_form_eta_mm(p) == pytest.approx(1.0, rel=1e-9)
        opt = beta0_optical(alpha, r, n_th)
        if opt.attainable and 0.0 < opt.value < 1e6:
            p = ReducedParams(alpha=alpha, beta=opt.value, r=r, n_th=n_th)
            assert 2 * closed_form_eta_oo(p) == pytest.approx(1.0, rel=1e-9)


class TestBracketing:
    def test_sign_change_at_analytic_thresholds(self):
        # 20 randomized fixed-parameter draws; the brute-force bisection of
        # the generic E_N must land on the analytic boundary
        rng = np.random.default_rng(711)
        found = 0
        while found < 20:
            alpha = rng.uniform(1e-2, 0.5)
            r = rng.uniform(0.3, 2.5)
            n_th = rng.uniform(0.5, 30.0)
            mech = beta0_mechanical(alpha, r, n_th)
            if mech.attainable and 0.5 < mech.value < 150.0:
                bracketed = brute_force_beta0(alpha, r, n_th, Subsystem.MM)
                assert bracketed == pytest.approx(mech.value, rel=1e-9)
                found += 1

    def test_temperature_sign_change(self):
        rng = np.random.default_rng(712)
        found = 0
        while found < 20:
            alpha = rng.uniform(1e-2, 0.5)
            beta = rng.uniform(5.0, 80.0)
            r = rng.uniform(0.3, 2.5)
            mech = t0_mechanical(alpha, beta, r)
            if mech.attainable and 1e-6 < mech.value < 1e-2:
                bracketed = brute_force_t0(alpha, beta, r, Subsystem.MM)
                assert bracketed is not None
                assert bracketed == pytest.approx(mech.value, rel=1e-8)
                found += 1


class TestSimonPrecondition:
    def test_hybrid_local_always_false(self, grid_draws):
        for p in grid_draws[:20]:
            cm = extract_subsystem(global_covariance(p), Subsystem.HYBRID_LOCAL)
            assert simon_precondition(cm) is False
            assert log_negativity(cm) == 0.0

    def test_squeezed_mechanical_true(self):
        p = ReducedParams(alpha=0.05, beta=34.0, r=1.0, n_th=0.0)
        cm = extract_subsystem(global_covariance(p), Subsystem.MM)
        assert simon_precondition(cm) is True

    def test_vacuum_false_and_separable(self):
        p = ReducedParams(alpha=0.05, beta=0.0, r=0.0, n_th=0.0)
        for tag in Subsystem:
            cm = extract_subsystem(global_covariance(p), tag)
            assert simon_precondition(cm) is False
            assert log_negativity(cm) <= 1e-12

    def test_false_implies_separable(self, grid_draws):
        for p in grid_draws:
            sigma = global_covariance(p)
            for tag in Subsystem:
                cm = extract_subsystem(sigma, tag)
                if not simon_precondition(cm):
                    assert log_negativity(cm) <= 1e-12
