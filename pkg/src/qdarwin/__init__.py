"""Quantum Darwinism in zero-temperature quantum Brownian motion.

A central oscillator coupled to a discretized ohmic bath is evolved as a
global Gaussian state; the package measures how redundantly the bath
records the oscillator's position and cross-checks every number against
closed-form theory.
"""

from .errors import (
    IntegrationError,
    InternalConsistencyError,
    ModelInstabilityError,
    PhysicalityError,
)
from .evolution import NormalModes, Propagator, evolve, normal_modes, propagator
from .gaussian import (
    GaussianState,
    ModeSubset,
    entropy,
    entropy_from_area,
    marginal,
    squared_area,
    symplectic_eigenvalues,
    symplectic_form,
)
from .information import (
    Fragment,
    PipCurve,
    RedundancyResult,
    band_information_spectrum,
    mutual_information,
    pip_curve,
    redundancy,
)
from .model import (
    BathSpec,
    QuadraticHamiltonian,
    SystemParams,
    build_bath,
    build_hamiltonian,
    initial_state,
    recurrence_time,
)
from .theory import TheoryParams
from .units import HBAR, UNITS, UnitsConfig

__all__ = [
    "HBAR",
    "UNITS",
    "UnitsConfig",
    "GaussianState",
    "ModeSubset",
    "symplectic_form",
    "marginal",
    "squared_area",
    "symplectic_eigenvalues",
    "entropy_from_area",
    "entropy",
    "SystemParams",
    "BathSpec",
    "QuadraticHamiltonian",
    "build_bath",
    "build_hamiltonian",
    "initial_state",
    "recurrence_time",
    "NormalModes",
    "Propagator",
    "normal_modes",
    "propagator",
    "evolve",
    "Fragment",
    "PipCurve",
    "RedundancyResult",
    "mutual_information",
    "pip_curve",
    "redundancy",
    "band_information_spectrum",
    "TheoryParams",
    "PhysicalityError",
    "ModelInstabilityError",
    "IntegrationError",
    "InternalConsistencyError",
]
