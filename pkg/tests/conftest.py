import hypothesis
import numpy as np
import pytest

from qdarwin import (
    SystemParams,
    build_bath,
    build_hamiltonian,
    evolve,
    initial_state,
    normal_modes,
    propagator,
)

hypothesis.settings.register_profile(
    "default", max_examples=25, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("default")

# Reference model: massive underdamped oscillator, ohmic bath with a
# sharp cutoff, m_S gamma0 = 25.
REF = dict(m_s=1000.0, omega_s=4.0, gamma0=1 / 40, cutoff=16.0, n_bands=128)


@pytest.fixture(scope="session")
def ref_bath():
    return build_bath(REF["m_s"], REF["gamma0"], REF["cutoff"], REF["n_bands"])


@pytest.fixture(scope="session")
def ref_system():
    return SystemParams(mass=REF["m_s"], omega=REF["omega_s"], squeeze=6.3e3)


@pytest.fixture(scope="session")
def ref_hamiltonian(ref_system, ref_bath):
    return build_hamiltonian(ref_system, ref_bath)


@pytest.fixture(scope="session")
def ref_modes(ref_hamiltonian):
    return normal_modes(ref_hamiltonian)


@pytest.fixture(scope="session")
def evolved_state(ref_system, ref_bath, ref_hamiltonian, ref_modes):
    """Factory: evolved global state at time t for a given squeezing."""
    cache = {}

    def make(t: float, squeeze: float = 6.3e3, axis: str = "x"):
        key = (t, squeeze, axis)
        if key not in cache:
            sys_p = SystemParams(
                mass=REF["m_s"],
                omega=REF["omega_s"],
                squeeze=squeeze,
                squeeze_axis=axis,
            )
            P = propagator(ref_hamiltonian, t, ref_modes)
            cache[key] = evolve(initial_state(sys_p, ref_bath), P)
        return cache[key]

    return make


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260809)
