"""Multimode Gaussian states in phase space.

A state is (mean, cov) over interleaved quadratures (x1, p1, x2, p2, ...).
Mode 0 is the central system, modes 1..N are bath bands in ascending
frequency.  All entropies are in nats.  In simulation units (hbar/2 = 1)
the squared symplectic area of a single mode is just det(cov), and a
vacuum mode has cov = diag(1/(m w), m w).
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import PhysicalityError
from .units import HBAR

# Symplectic eigenvalues within this window below 1 are treated as
# round-off and clamped; anything lower raises PhysicalityError.  The
# window must absorb the float64 representation floor of strongly
# squeezed covariances (entrywise rounding of a cond ~ 1e22 matrix
# perturbs near-unit symplectic eigenvalues at the 1e-8..1e-7 level even
# for exactly symplectic evolution).
AREA_CLAMP_TOL = 1e-6

_SYMMETRY_RTOL = 1e-12


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form J with per-mode blocks [[0,1],[-1,0]].

    Satisfies J @ J = -I.
    """
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    J = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        J[2 * k, 2 * k + 1] = 1.0
        J[2 * k + 1, 2 * k] = -1.0
    return J


@dataclass(frozen=True)
class ModeSubset:
    """Sorted, duplicate-free mode indices into a GaussianState."""

    indices: tuple

    def __init__(self, indices: Iterable[int]):
        idx = tuple(sorted(int(i) for i in indices))
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate mode indices in {idx}")
        if idx and idx[0] < 0:
            raise ValueError(f"negative mode index in {idx}")
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return len(self.indices)

    def validate_for(self, n_modes: int) -> None:
        if not self.indices:
            raise ValueError("empty mode subset")
        if self.indices[-1] >= n_modes:
            raise ValueError(
                f"mode index {self.indices[-1]} out of range for {n_modes} modes"
            )


@dataclass(frozen=True)
class GaussianState:
    """Gaussian state given by its first and second moments.

    Attributes
    ----------
    mean : ndarray, shape (2n,)
        Quadrature expectation values, interleaved (x1, p1, ..., xn, pn).
    cov : ndarray, shape (2n, 2n)
        Symmetric matrix of second central moments.
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float)
        cov = np.asarray(self.cov, dtype=float)
        if mean.ndim != 1 or cov.shape != (mean.size, mean.size):
            raise ValueError(f"inconsistent shapes {mean.shape}, {cov.shape}")
        if mean.size == 0 or mean.size % 2 != 0:
            raise ValueError("mean length must be a positive even number")
        scale = max(1.0, np.abs(cov).max())
        if np.abs(cov - cov.T).max() > _SYMMETRY_RTOL * scale:
            raise ValueError("covariance matrix is not symmetric")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2

    def validate(self) -> None:
        """Check the uncertainty bound (all symplectic eigenvalues >= 1)."""
        symplectic_eigenvalues(self)


def vacuum_cov(mass: float, omega: float) -> np.ndarray:
    """Ground-state covariance diag(hbar/(2 m w), hbar m w / 2) of one mode."""
    return np.diag([HBAR / (2.0 * mass * omega), HBAR * mass * omega / 2.0])


def _phase_space_indices(modes: Sequence[int]) -> np.ndarray:
    idx = np.empty(2 * len(modes), dtype=int)
    idx[0::2] = 2 * np.asarray(modes, dtype=int)
    idx[1::2] = idx[0::2] + 1
    return idx


def marginal(state: GaussianState, subset: ModeSubset) -> GaussianState:
    """Reduced Gaussian state on the selected modes.

    Tracing out modes of a Gaussian state keeps the rows/columns of the
    remaining ones; the marginal of the full set is the state itself.
    """
    subset.validate_for(state.n_modes)
    idx = _phase_space_indices(subset.indices)
    return GaussianState(mean=state.mean[idx], cov=state.cov[np.ix_(idx, idx)])


def squared_area(state: GaussianState) -> float:
    """Squared symplectic area a^2 = (hbar/2)^-2 det(cov) of a one-mode state.

    a^2 = 1 for any pure Gaussian state; decoherence increases it.
    """
    if state.n_modes != 1:
        raise ValueError(
            "squared_area is defined for single-mode states; "
            "use symplectic_eigenvalues for multimode states"
        )
    a2 = float(np.linalg.det(state.cov)) / (HBAR / 2.0) ** 2
    if a2 < 1.0 - AREA_CLAMP_TOL:
        raise PhysicalityError(f"squared symplectic area {a2} < 1")
    return a2


def _symplectic_spectrum(cov: np.ndarray) -> np.ndarray:
    """Unclamped symplectic spectrum of a covariance matrix, descending."""
    sigma = cov / (HBAR / 2.0)
    n = sigma.shape[0] // 2
    J = symplectic_form(n)
    d = np.sqrt(np.diag(sigma))
    try:
        if np.any(d <= 0):
            raise np.linalg.LinAlgError("nonpositive variance")
        # eig(J sigma) = eig(L^T J L) for sigma = L L^T; the conjugated
        # matrix is antisymmetric, so its singular values are the
        # eigenvalue magnitudes, each appearing twice.  Equilibrating to
        # unit diagonal first keeps the Cholesky factor accurate for the
        # huge dynamic ranges a squeezed massive oscillator produces.
        Lt = np.linalg.cholesky(sigma / np.outer(d, d))
        K = Lt.T @ (J * np.outer(d, d)) @ Lt
        vals = np.linalg.svd(K, compute_uv=False)
    except np.linalg.LinAlgError:
        # near-singular correlations: fall back to the plain spectrum
        ev = np.linalg.eigvals(J @ sigma)
        vals = np.sort(np.abs(ev))[::-1]
    return vals[0::2]


def symplectic_eigenvalues(state: GaussianState) -> np.ndarray:
    """Symplectic eigenvalues a_k of the state, descending.

    These are the magnitudes of the (purely imaginary) eigenvalues of
    (hbar/2)^-1 J cov.  Values inside the round-off window below 1 are
    clamped to 1; values below the window raise PhysicalityError.
    """
    a = _symplectic_spectrum(state.cov)
    low = a.min()
    if low < 1.0 - AREA_CLAMP_TOL:
        raise PhysicalityError(
            f"symplectic eigenvalue {low} below 1 by more than {AREA_CLAMP_TOL}; "
            "covariance is unphysical"
        )
    return np.maximum(a, 1.0)


def entropy_from_area(a: float) -> float:
    """Von Neumann entropy (nats) of a Gaussian mode with symplectic area a.

    H(a) = [(a+1) ln(a+1) - (a-1) ln(a-1)] / 2 - ln 2, with the a -> 1
    limit taken as exactly 0.  For large a, H(a) ~ ln(e a / 2).
    """
    if a < 1.0:
        raise ValueError(f"symplectic area {a} < 1")
    if a == 1.0:
        return 0.0
    ap, am = a + 1.0, a - 1.0
    return 0.5 * (ap * np.log(ap) - am * np.log(am)) - np.log(2.0)


def entropy(state: GaussianState, subset: ModeSubset | None = None) -> float:
    """Entropy (nats) of the reduced state on `subset` (default: all modes).

    Sum of H(a_k) over the symplectic eigenvalues of the marginal.
    """
    if subset is not None:
        state = marginal(state, subset)
    return float(sum(entropy_from_area(a) for a in symplectic_eigenvalues(state)))
