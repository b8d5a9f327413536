"""Exact symplectic evolution under a time-independent quadratic Hamiltonian.

The Hamiltonian is diagonalized once into normal modes; the phase-space
propagator at any time t is then assembled from per-mode rotations, so
there is no step-size error at all.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ModelInstabilityError
from .gaussian import GaussianState
from .model import QuadraticHamiltonian


@dataclass(frozen=True)
class NormalModes:
    """Eigenfrequencies and mass-weighted eigenbasis of a QuadraticHamiltonian."""

    frequencies: np.ndarray = field(repr=False)
    transform: np.ndarray = field(repr=False)  # orthogonal, columns = modes
    masses: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class Propagator:
    """Symplectic matrix S_t on interleaved (x1, p1, ...) coordinates."""

    t: float
    matrix: np.ndarray = field(repr=False)


def normal_modes(H: QuadraticHamiltonian) -> NormalModes:
    """Diagonalize M^(-1/2) K M^(-1/2); frequencies are sqrt-eigenvalues."""
    m = H.masses
    W = H.stiffness / np.sqrt(np.outer(m, m))
    evals, O = np.linalg.eigh(W)
    if evals[0] <= 0:
        raise ModelInstabilityError(
            f"normal-mode eigenvalue {evals[0]} is not positive"
        )
    return NormalModes(frequencies=np.sqrt(evals), transform=O, masses=m.copy())


def _interleave(n: int) -> np.ndarray:
    idx = np.empty(2 * n, dtype=int)
    idx[0::2] = np.arange(n)
    idx[1::2] = n + np.arange(n)
    return idx


def propagator(
    H: QuadraticHamiltonian, t: float, modes: NormalModes | None = None
) -> Propagator:
    """Exact phase-space propagator at time t.

    Pass a precomputed `modes` to amortize the diagonalization across
    many times (the result is identical).
    """
    if modes is None:
        modes = normal_modes(H)
    nu, O, m = modes.frequencies, modes.transform, modes.masses
    n = m.size
    rm = 1.0 / np.sqrt(m)
    rp = np.sqrt(m)

    cos_m = O @ (np.cos(nu * t)[:, None] * O.T)
    sin_over = O @ ((np.sin(nu * t) / nu)[:, None] * O.T)
    sin_times = O @ ((nu * np.sin(nu * t))[:, None] * O.T)

    # Blocks of the (x..x, p..p)-ordered propagator:
    #   x(t) = A x + B p,  p(t) = C x + D p
    A = rm[:, None] * cos_m * rp[None, :]
    B = rm[:, None] * sin_over * rm[None, :]
    C = -rp[:, None] * sin_times * rp[None, :]
    D = rp[:, None] * cos_m * rm[None, :]
    S_block = np.block([[A, B], [C, D]])

    idx = _interleave(n)
    return Propagator(t=t, matrix=S_block[np.ix_(idx, idx)])


def evolve(state: GaussianState, P: Propagator) -> GaussianState:
    """Apply S_t: mean -> S mean, cov -> S cov S^T.

    The output covariance is re-symmetrized to remove round-off; global
    symplectic eigenvalues (hence purity) are preserved.
    """
    S = P.matrix
    if S.shape[0] != state.mean.size:
        raise ValueError(
            f"propagator dimension {S.shape[0]} != state dimension {state.mean.size}"
        )
    cov = S @ state.cov @ S.T
    return GaussianState(mean=S @ state.mean, cov=(cov + cov.T) / 2.0)


def mean_energy(state: GaussianState, H: QuadraticHamiltonian) -> float:
    """<H> from the first and second moments (used as a conservation check)."""
    x = state.mean[0::2]
    p = state.mean[1::2]
    cov_xx = state.cov[0::2, 0::2]
    cov_pp = state.cov[1::2, 1::2]
    kin = 0.5 * (np.sum(p**2 / H.masses) + np.sum(np.diag(cov_pp) / H.masses))
    pot = 0.5 * (x @ H.stiffness @ x + np.trace(H.stiffness @ cov_xx))
    return float(kin + pot)
