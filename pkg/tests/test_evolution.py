import numpy as np
import pytest

from qdarwin import (
    ModelInstabilityError,
    ModeSubset,
    QuadraticHamiltonian,
    SystemParams,
    build_bath,
    build_hamiltonian,
    entropy,
    evolve,
    initial_state,
    normal_modes,
    propagator,
    symplectic_form,
)
from qdarwin.evolution import mean_energy


def two_by_two(a, b, g, m1=1.0, m2=1.0):
    K = np.array([[a, g], [g, b]])
    return QuadraticHamiltonian(masses=np.array([m1, m2]), stiffness=K)


class TestNormalModes:
    def test_decoupled_frequencies(self):
        bath = build_bath(1000.0, 0.0, 16.0, 8)
        sysp = SystemParams(mass=1000.0, omega=4.0)
        H = build_hamiltonian(sysp, bath)
        nu = np.sort(normal_modes(H).frequencies)
        expected = np.sort(np.concatenate(([4.0], bath.frequencies)))
        np.testing.assert_allclose(nu, expected, rtol=1e-12)

    def test_coupled_pair_closed_form(self):
        # hand-solved 2x2 eigenproblem for [[a, g], [g, b]]
        a, b, g = 9.0, 4.0, 1.5
        nu = np.sort(normal_modes(two_by_two(a, b, g)).frequencies)
        disc = np.sqrt((a - b) ** 2 / 4.0 + g * g)
        expected = np.sqrt([(a + b) / 2.0 - disc, (a + b) / 2.0 + disc])
        np.testing.assert_allclose(nu, expected, rtol=1e-12)

    def test_reference_model_all_real_positive(self, ref_modes):
        assert np.all(ref_modes.frequencies > 0)

    def test_reconstruction_error(self, ref_hamiltonian, ref_modes):
        m = ref_hamiltonian.masses
        W = ref_modes.transform @ (
            ref_modes.frequencies[:, None] ** 2 * ref_modes.transform.T
        )
        K_back = W * np.sqrt(np.outer(m, m))
        err = np.abs(K_back - ref_hamiltonian.stiffness).max()
        assert err < 1e-9 * np.abs(ref_hamiltonian.stiffness).max()

    def test_unstable_hamiltonian_raises(self):
        with pytest.raises(ModelInstabilityError):
            normal_modes(two_by_two(1.0, 1.0, 2.0))


class TestPropagator:
    def test_time_zero_is_identity(self, ref_hamiltonian, ref_modes):
        S = propagator(ref_hamiltonian, 0.0, ref_modes).matrix
        assert np.abs(S - np.eye(S.shape[0])).max() < 1e-12

    def test_full_period_of_decoupled_mode(self):
        H = two_by_two(4.0, 9.0, 0.0)
        S = propagator(H, np.pi).matrix  # one period of the w=2 mode
        # mode 0 returns to identity; mode 1 (w=3) is at half period
        assert np.abs(S[:2, :2] - np.eye(2)).max() < 1e-12
        assert np.abs(S[2:, 2:] + np.eye(2)).max() < 1e-12

    def test_group_property(self, ref_hamiltonian, ref_modes):
        S1 = propagator(ref_hamiltonian, 1.0, ref_modes).matrix
        S3 = propagator(ref_hamiltonian, 3.0, ref_modes).matrix
        S4 = propagator(ref_hamiltonian, 4.0, ref_modes).matrix
        scale = np.abs(S4).max()
        assert np.abs(S1 @ S3 - S4).max() < 1e-9 * scale

    @pytest.mark.parametrize("t", [0.5, 1.0, 2.0, 4.0, 8.0])
    def test_symplecticity(self, ref_hamiltonian, ref_modes, t):
        S = propagator(ref_hamiltonian, t, ref_modes).matrix
        J = symplectic_form(S.shape[0] // 2)
        assert np.abs(S @ J @ S.T - J).max() < 1e-9


class TestEvolve:
    def test_vacuum_of_decoupled_hamiltonian_is_stationary(self):
        bath = build_bath(1000.0, 0.0, 16.0, 6)
        sysp = SystemParams(mass=1000.0, omega=4.0)
        H = build_hamiltonian(sysp, bath)
        st0 = initial_state(sysp, bath)
        st = evolve(st0, propagator(H, 1.7))
        np.testing.assert_allclose(st.cov, st0.cov, rtol=1e-10, atol=1e-12)

    def test_free_oscillator_mean(self):
        bath = build_bath(1000.0, 0.0, 16.0, 4)
        sysp = SystemParams(mass=1000.0, omega=4.0, x0=1.0)
        H = build_hamiltonian(sysp, bath)
        for t in (0.3, 1.1, 2.9):
            st = evolve(initial_state(sysp, bath), propagator(H, t))
            assert st.mean[0] == pytest.approx(np.cos(4.0 * t), abs=1e-12)

    def test_global_purity_preserved(self, evolved_state):
        assert entropy(evolved_state(4.0, squeeze=1.0)) < 1e-6

    def test_dimension_mismatch_rejected(self, ref_hamiltonian, ref_modes):
        bath = build_bath(1000.0, 1 / 40, 16.0, 4)
        sysp = SystemParams(mass=1000.0, omega=4.0)
        small = initial_state(sysp, bath)
        with pytest.raises(ValueError):
            evolve(small, propagator(ref_hamiltonian, 1.0, ref_modes))

    def test_energy_conservation(self, ref_system, ref_bath, ref_hamiltonian, ref_modes):
        st0 = initial_state(ref_system, ref_bath)
        e0 = mean_energy(st0, ref_hamiltonian)
        for t in (0.5, 2.0, 8.0):
            st = evolve(st0, propagator(ref_hamiltonian, t, ref_modes))
            assert mean_energy(st, ref_hamiltonian) == pytest.approx(e0, rel=1e-6)

    def test_time_reversal(self, ref_hamiltonian, ref_modes, ref_system, ref_bath):
        st0 = initial_state(ref_system, ref_bath)
        fwd = propagator(ref_hamiltonian, 2.5, ref_modes)
        back = propagator(ref_hamiltonian, -2.5, ref_modes)
        st = evolve(evolve(st0, fwd), back)
        scale = np.abs(st0.cov).max()
        assert np.abs(st.cov - st0.cov).max() < 1e-8 * scale
        assert np.abs(st.mean - st0.mean).max() < 1e-8

    def test_entropy_of_system_grows_then_is_finite(self, evolved_state):
        h1 = entropy(evolved_state(0.5), ModeSubset([0]))
        h2 = entropy(evolved_state(4.0), ModeSubset([0]))
        assert 0.0 < h1 < h2
