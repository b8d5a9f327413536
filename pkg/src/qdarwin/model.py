"""Quantum Brownian motion model construction.

A central oscillator (mass m_S, renormalized frequency omega_S) couples
linearly in position to a bath of oscillators discretized from an ohmic
spectral density I(w) = (2 m_S gamma0 / pi) w with a sharp cutoff at
Lambda.  The counterterm completion keeps the observed system frequency
at omega_S.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ModelInstabilityError
from .gaussian import GaussianState, vacuum_cov
from .units import HBAR


@dataclass(frozen=True)
class SystemParams:
    """Central oscillator parameters and its initial squeezed state.

    The squeezing factor s multiplies the standard deviation of the
    `squeeze_axis` quadrature relative to the ground state (and divides
    the conjugate one), so an x-squeezed state has spatial extent
    s * sqrt(hbar / (2 m_S omega_S)) and still unit symplectic area.
    """

    mass: float = 1000.0
    omega: float = 4.0
    squeeze: float = 1.0
    squeeze_axis: str = "x"
    x0: float = 0.0
    p0: float = 0.0

    def __post_init__(self):
        if self.mass <= 0 or self.omega <= 0:
            raise ValueError("mass and omega must be positive")
        if self.squeeze < 1.0:
            raise ValueError("squeeze factor must be >= 1")
        if self.squeeze_axis not in ("x", "p"):
            raise ValueError("squeeze_axis must be 'x' or 'p'")

    @property
    def spatial_variance(self) -> float:
        """Initial variance of the delocalized quadrature, in position units.

        For p-squeezing this is the spatial amplitude the momentum extent
        turns into after a quarter period; it equals the x-squeezed value.
        """
        return self.squeeze**2 * HBAR / (2.0 * self.mass * self.omega)


@dataclass(frozen=True)
class BathSpec:
    """Discretized ohmic bath: n equal bins of [0, Lambda], midpoint rule.

    Couplings follow the differential element
    dC^2 = (4 m_S m_n gamma0 / pi) w^2 dw integrated over one bin at its
    midpoint, which keeps sum(C_n^2 / (m_n w_n^2)) equal to the continuum
    counterterm (4 m_S gamma0 / pi) Lambda exactly.
    """

    n_bands: int
    cutoff: float
    gamma0: float
    frequencies: np.ndarray = field(repr=False)
    masses: np.ndarray = field(repr=False)
    couplings_sq: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.frequencies, dtype=float)
        if self.n_bands < 1:
            raise ValueError("n_bands must be >= 1")
        if w.size != self.n_bands or np.any(w <= 0) or np.any(np.diff(w) <= 0):
            raise ValueError("band frequencies must be positive and increasing")
        # gamma0 = 0 (decoupled limit) is allowed; otherwise couplings > 0.
        if np.any(np.asarray(self.couplings_sq) < 0):
            raise ValueError("squared couplings must be nonnegative")
        if self.gamma0 > 0 and np.any(np.asarray(self.couplings_sq) == 0):
            raise ValueError("squared couplings must be positive for gamma0 > 0")

    @property
    def delta_omega(self) -> float:
        return self.cutoff / self.n_bands


def build_bath(m_s: float, gamma0: float, cutoff: float, n_bands: int) -> BathSpec:
    """Discretize the ohmic bath for a system of mass m_s.

    gamma0 = 0 gives the decoupled (zero-friction) limit.
    """
    if m_s <= 0 or gamma0 < 0 or cutoff <= 0 or n_bands < 1:
        raise ValueError("bath parameters must be positive (gamma0 may be zero)")
    dw = cutoff / n_bands
    freqs = (np.arange(n_bands) + 0.5) * dw
    masses = np.ones(n_bands)
    c_sq = (4.0 * m_s * masses * gamma0 / np.pi) * freqs**2 * dw
    return BathSpec(
        n_bands=n_bands,
        cutoff=cutoff,
        gamma0=gamma0,
        frequencies=freqs,
        masses=masses,
        couplings_sq=c_sq,
    )


@dataclass(frozen=True)
class QuadraticHamiltonian:
    """H = sum_i p_i^2 / (2 m_i) + (1/2) x^T K x.

    Mode 0 is the system; K couples the system position to each band
    position (no band-band terms).
    """

    masses: np.ndarray = field(repr=False)
    stiffness: np.ndarray = field(repr=False)

    def __post_init__(self):
        K = np.asarray(self.stiffness, dtype=float)
        m = np.asarray(self.masses, dtype=float)
        if K.shape != (m.size, m.size):
            raise ValueError("stiffness shape inconsistent with masses")
        if np.abs(K - K.T).max() > 1e-12 * max(1.0, np.abs(K).max()):
            raise ValueError("stiffness matrix must be symmetric")

    @property
    def n_modes(self) -> int:
        return self.masses.size


def build_hamiltonian(
    sys: SystemParams, bath: BathSpec, counterterm: bool = True
) -> QuadraticHamiltonian:
    """Assemble the global Hamiltonian from system and bath.

    The bare system frequency is Omega_0^2 = omega_S^2 + sum_n C_n^2 /
    (m_S m_n w_n^2); the counterterm cancels the coupling-induced
    softening so the renormalized frequency stays omega_S.  Disabling it
    (counterterm=False) exposes the bare model, which can be unstable.
    """
    n = bath.n_bands + 1
    masses = np.concatenate(([sys.mass], bath.masses))
    K = np.zeros((n, n))
    shift = float(np.sum(bath.couplings_sq / (bath.masses * bath.frequencies**2)))
    omega0_sq = sys.omega**2 + (shift / sys.mass if counterterm else 0.0)
    K[0, 0] = sys.mass * omega0_sq
    K[np.arange(1, n), np.arange(1, n)] = bath.masses * bath.frequencies**2
    C = np.sqrt(bath.couplings_sq)
    K[0, 1:] = C
    K[1:, 0] = C
    w = np.linalg.eigvalsh(K / np.sqrt(np.outer(masses, masses)))
    if w[0] <= 0:
        raise ModelInstabilityError(
            f"mass-weighted stiffness has non-positive eigenvalue {w[0]}; "
            "coupling too strong for this discretization"
        )
    return QuadraticHamiltonian(masses=masses, stiffness=K)


def initial_state(sys: SystemParams, bath: BathSpec) -> GaussianState:
    """Squeezed coherent system (x) ground-state bath, as a product state."""
    n = bath.n_bands + 1
    mean = np.zeros(2 * n)
    mean[0], mean[1] = sys.x0, sys.p0
    cov = np.zeros((2 * n, 2 * n))
    s2 = sys.squeeze**2
    gs = vacuum_cov(sys.mass, sys.omega)
    if sys.squeeze_axis == "x":
        cov[0, 0], cov[1, 1] = gs[0, 0] * s2, gs[1, 1] / s2
    else:
        cov[0, 0], cov[1, 1] = gs[0, 0] / s2, gs[1, 1] * s2
    for k in range(bath.n_bands):
        i = 2 * (k + 1)
        cov[i : i + 2, i : i + 2] = vacuum_cov(bath.masses[k], bath.frequencies[k])
    return GaussianState(mean=mean, cov=cov)


def recurrence_time(bath: BathSpec) -> float:
    """Time 2 pi / delta_omega beyond which the discretization is unfaithful."""
    return 2.0 * np.pi / bath.delta_omega
