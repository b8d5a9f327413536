import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdarwin import ModeSubset, TheoryParams, entropy
from qdarwin.theory import (
    band_area_increase,
    decoherence_density_driven,
    decoherence_density_static,
    decoherence_factor_static,
    pip_plateau,
    redundancy_approx,
    redundancy_exact,
    redundancy_from_squeezing,
    system_area_increase,
    system_entropy,
)
from qdarwin.units import HBAR

REF = TheoryParams(
    m_s=1000.0,
    gamma0=1 / 40,
    omega_s=4.0,
    cutoff=16.0,
    spatial_variance=6.3e3**2 / 4000.0,
)

LN_6300 = 8.748304912379624
PIP_AT_TENTH = 7.649692623711514  # ln 6300 + 0.5 ln(1/9)
SQUEEZE_FORM_REF = 5.752652095513641  # 6300^0.2


def overlap_oracle(omega, t, x_sep, p, band_width):
    """Independent two-branch overlap from the conditional band dynamics.

    A band starting in its ground state and suddenly displaced to a
    center c = -C x / (m w^2) moves on a circle: y(t) = c (1 - cos wt),
    q(t) = m w c sin(wt).  For two branches the coherent states share the
    vacuum covariance, so |<1|2>| = exp(-du^T sigma^-1 du / 8).
    """
    m = 1.0
    c_sq = (4.0 * p.m_s * p.gamma0 / np.pi) * omega**2 * band_width
    dc = -np.sqrt(c_sq) * x_sep / (m * omega**2)
    dy = dc * (1.0 - np.cos(omega * t))
    dq = m * omega * dc * np.sin(omega * t)
    sigma_inv = np.diag([2.0 * m * omega / HBAR, 2.0 / (HBAR * m * omega)])
    du = np.array([dy, dq])
    return float(np.exp(-du @ sigma_inv @ du / 8.0))


def driven_density_naive(omega, t, p):
    """Direct transcription of the driven-decoherence density (no
    resonance-safe rewriting); valid away from omega = omega_s."""
    ws = p.omega_s
    g = np.sin(omega * t) - (ws / omega) * np.sin(ws * t)
    h = np.cos(omega * t) - np.cos(ws * t)
    return (
        (p.m_s * p.gamma0 / (np.pi * p.hbar))
        * omega**3
        / (ws**2 - omega**2) ** 2
        * (g * g + h * h)
    )


class TestStaticDecoherenceFactor:
    def test_identical_branches(self):
        assert decoherence_factor_static(3.0, 1.7, 0.0, REF, 0.125) == 1.0

    def test_band_period_recurrence(self):
        w = 5.0
        val = decoherence_factor_static(w, 2 * np.pi / w, 0.4, REF, 0.125)
        assert val == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize(
        "omega,t,x_sep", [(2.0, 0.9, 0.3), (7.5, 3.3, 0.05), (0.4, 11.0, 1.2)]
    )
    def test_matches_coherent_overlap_oracle(self, omega, t, x_sep):
        got = decoherence_factor_static(omega, t, x_sep, REF, 0.125)
        want = overlap_oracle(omega, t, x_sep, REF, 0.125)
        assert got == pytest.approx(want, rel=1e-6)

    def test_rejects_nonpositive_frequency(self):
        with pytest.raises(ValueError):
            decoherence_factor_static(0.0, 1.0, 0.1, REF, 0.125)


class TestStaticDensity:
    def test_zero_time(self):
        assert decoherence_density_static(3.0, 0.0, REF) == 0.0

    def test_small_time_series(self):
        # (m_S gamma0 / pi hbar) w t^2 with relative error (w t)^2 / 12
        t = 1e-3
        for w in (1.0, 4.0, 12.0):
            lead = (REF.m_s * REF.gamma0 / (np.pi * REF.hbar)) * w * t**2
            assert decoherence_density_static(w, t, REF) == pytest.approx(
                lead, rel=1.1 * (w * t) ** 2 / 12.0
            )

    def test_vanishes_linearly_toward_zero_frequency(self):
        # the 1/w prefactor is harmless: (1 - cos wt)/w ~ w t^2 / 2
        vals = decoherence_density_static(np.array([1e-3, 1e-6, 1e-9]), 2.0, REF)
        assert np.all(vals >= 0.0)
        assert vals[1] / vals[0] == pytest.approx(1e-3, rel=1e-5)
        assert vals[2] / vals[1] == pytest.approx(1e-3, rel=1e-5)


class TestDrivenDensity:
    @pytest.mark.parametrize("omega", [0.5, 2.0, 3.9, 4.1, 8.0, 15.0])
    def test_matches_direct_formula_off_resonance(self, omega):
        for t in (0.3, 4.0, 20.0):
            got = float(decoherence_density_driven(omega, t, REF))
            want = driven_density_naive(omega, t, REF)
            assert got == pytest.approx(want, rel=1e-12, abs=1e-300)

    def test_continuous_through_resonance(self):
        t = 4.0
        ws = REF.omega_s
        vals = [
            float(decoherence_density_driven(w, t, REF))
            for w in (ws - 1e-7, ws - 1e-12, ws, ws + 1e-12, ws + 1e-7)
        ]
        assert np.all(np.isfinite(vals))
        assert max(vals) - min(vals) < 1e-6 * max(vals)

    def test_secular_growth_at_resonance(self):
        # on resonance the density grows as t^2 with prefactor
        # m_S gamma0 omega_S / (4 pi hbar)
        pref = REF.m_s * REF.gamma0 * REF.omega_s / (4.0 * np.pi * REF.hbar)
        for t in (50.0, 100.0):
            got = float(decoherence_density_driven(REF.omega_s, t, REF))
            assert got / t**2 == pytest.approx(pref, rel=5.0 / t)

    @pytest.mark.parametrize("omega", [1.0, 2.0, 4.0, 8.0])
    def test_static_limit_at_small_time(self, omega):
        # ratio driven/static = 1 - (t omega_S)^2/3 + O(t^4)
        for t, tol in ((1e-3, 1e-5), (1e-2, 1e-3)):
            ratio = float(
                decoherence_density_driven(omega, t, REF)
                / decoherence_density_static(omega, t, REF)
            )
            assert ratio == pytest.approx(1.0, abs=tol)

    @given(
        st.floats(0.01, 16.0),
        st.floats(0.0, 30.0),
    )
    def test_nonnegative(self, omega, t):
        assert float(decoherence_density_driven(omega, t, REF)) >= 0.0
        if t > 0:
            assert float(decoherence_density_static(omega, t, REF)) >= 0.0


class TestSystemAreaIncrease:
    def test_zero_time(self):
        assert system_area_increase(0.0, REF) == 0.0
        assert system_entropy(0.0, REF) == 0.0

    def test_decoupled(self):
        p = TheoryParams(
            m_s=1000.0, gamma0=0.0, omega_s=4.0, cutoff=16.0, spatial_variance=100.0
        )
        assert system_area_increase(5.0, p) == pytest.approx(0.0, abs=1e-12)

    def test_against_dense_trapezoid(self):
        # independent quadrature of the same density on a fine grid
        t = 4.0
        w = np.linspace(1e-9, REF.cutoff, 400_001)
        dens = decoherence_density_driven(w, t, REF)
        ref = (8.0 * REF.spatial_variance / REF.hbar) * np.trapezoid(dens, w)
        assert system_area_increase(t, REF) == pytest.approx(ref, rel=1e-6)

    def test_matches_full_simulation_entropy(self, evolved_state):
        # the closed form approximates the measured system entropy of the
        # fully decohered reference state to within one nat
        h_num = entropy(evolved_state(4.0), ModeSubset([0]))
        h_th = system_entropy(4.0, REF)
        assert abs(h_num - h_th) < 1.0

    def test_band_area_increase_splits_the_integral(self):
        t = 2.0
        whole = system_area_increase(t, REF)
        parts = sum(
            band_area_increase(lo, lo + 4.0, t, REF) for lo in (0.0, 4.0, 8.0, 12.0)
        )
        assert parts == pytest.approx(whole, rel=1e-6)


class TestPipPlateau:
    def test_midpoint_is_the_system_entropy(self):
        assert pip_plateau(0.5, 3.7) == pytest.approx(3.7, rel=1e-15)

    def test_reference_value(self):
        assert pip_plateau(0.1, LN_6300) == pytest.approx(PIP_AT_TENTH, rel=1e-12)

    def test_clamped_to_physical_range(self):
        assert pip_plateau(1e-9, 2.0) == 0.0
        assert pip_plateau(1.0 - 1e-12, 2.0) == 4.0

    @given(st.floats(0.01, 0.99), st.floats(0.1, 12.0))
    def test_complement_identity(self, f, h):
        total = pip_plateau(f, h) + pip_plateau(1.0 - f, h)
        assert total == pytest.approx(2.0 * h, rel=1e-12)

    def test_rejects_degenerate_fraction(self):
        with pytest.raises(ValueError):
            pip_plateau(0.0, 1.0)


class TestRedundancyForms:
    def test_vanishing_deficit_floor(self):
        assert redundancy_exact(1e-14, 5.0) == pytest.approx(2.0, rel=1e-12)

    def test_half_deficit_is_linear_in_squeeze(self):
        for s in (100.0, 6.3e3):
            assert redundancy_exact(0.5, np.log(s)) == pytest.approx(1.0 + s, rel=1e-12)

    def test_squeeze_form_reference_value(self):
        assert redundancy_from_squeezing(0.1, 6.3e3) == pytest.approx(
            SQUEEZE_FORM_REF, rel=1e-12
        )

    @given(st.floats(0.01, 0.99), st.floats(0.1, 12.0))
    def test_family_agreement(self, delta, h):
        exact = redundancy_exact(delta, h)
        approx = redundancy_approx(delta, h)
        assert exact == pytest.approx(approx * (1.0 + np.exp(-2 * delta * h)), rel=1e-12)

    @given(st.floats(0.01, 0.98), st.floats(0.1, 11.0))
    def test_monotone_in_both_arguments(self, delta, h):
        assert redundancy_exact(delta + 0.01, h) > redundancy_exact(delta, h)
        assert redundancy_exact(delta, h + 0.5) > redundancy_exact(delta, h)

    @given(st.floats(0.05, 0.5), st.floats(1.0, 1e4), st.floats(1.5, 4.0))
    def test_log_log_slope_is_twice_delta(self, delta, s, factor):
        lhs = np.log(redundancy_from_squeezing(delta, s * factor))
        rhs = np.log(redundancy_from_squeezing(delta, s))
        assert (lhs - rhs) / np.log(factor) == pytest.approx(2 * delta, rel=1e-9)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            redundancy_exact(0.0, 1.0)
        with pytest.raises(ValueError):
            redundancy_from_squeezing(0.1, 0.5)


class TestTheoryParams:
    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            TheoryParams(
                m_s=0.0, gamma0=0.1, omega_s=4.0, cutoff=16.0, spatial_variance=1.0
            )

    def test_allows_zero_coupling(self):
        p = TheoryParams(
            m_s=1.0, gamma0=0.0, omega_s=4.0, cutoff=16.0, spatial_variance=1.0
        )
        assert p.gamma0 == 0.0
