"""Closed-form predictions for the massive, underdamped regime.

In the macroscopic limit the system acts as a classical position-basis
label x: each band evolves conditionally on x, branches overlap by a
decoherence factor exp(-d (x - x')^2), and the additive density d
accumulates per unit bandwidth.  Everything downstream (system entropy,
partial-information plateau, redundancy) follows from integrals of that
density, giving independent cross-checks for the full simulation.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import IntegrationError
from .gaussian import entropy_from_area
from .units import HBAR


@dataclass(frozen=True)
class TheoryParams:
    """Parameters entering the closed-form expressions.

    `spatial_variance` is the initial variance of the system's extended
    quadrature in position units (s^2 * hbar / (2 m_S omega_S) for a
    squeezed state).
    """

    m_s: float
    gamma0: float
    omega_s: float
    cutoff: float
    spatial_variance: float
    hbar: float = HBAR

    def __post_init__(self):
        for name in ("m_s", "omega_s", "cutoff", "spatial_variance", "hbar"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.gamma0 < 0:
            raise ValueError("gamma0 must be nonnegative")


def decoherence_factor_static(
    omega: float, t: float, x_sep: float, p: TheoryParams, band_width: float
) -> float:
    """|overlap| of the two band branches labelled by positions x, x' = x + x_sep.

    Valid when the system is effectively frozen.  The band coupling C^2
    comes from the ohmic differential element integrated over one band of
    width `band_width` (band mass 1):

        |Gamma| = exp[- C^2 (x - x')^2 (1 - cos w t) / (2 m hbar w^3)]
    """
    if omega <= 0:
        raise ValueError("omega must be positive")
    c_sq = (4.0 * p.m_s * p.gamma0 / np.pi) * omega**2 * band_width
    one_minus_cos = 2.0 * np.sin(omega * t / 2.0) ** 2
    return float(
        np.exp(-c_sq * x_sep**2 * one_minus_cos / (2.0 * p.hbar * omega**3))
    )


def decoherence_density_static(omega, t: float, p: TheoryParams):
    """d(decoherence)/d(omega) for a frozen system: (2 m_S g0 / pi hbar w)(1 - cos w t)."""
    omega = np.asarray(omega, dtype=float)
    one_minus_cos = 2.0 * np.sin(omega * t / 2.0) ** 2
    return (2.0 * p.m_s * p.gamma0 / (np.pi * p.hbar * omega)) * one_minus_cos


def decoherence_density_driven(omega, t: float, p: TheoryParams):
    """d(decoherence)/d(omega) when the system oscillates at omega_S.

    With branch trajectories x0 cos(omega_S t) driving each band, the
    density is

        (m_S g0 / pi hbar) w^3 / (w_S^2 - w^2)^2
            * [(sin wt - (w_S/w) sin w_S t)^2 + (cos wt - cos w_S t)^2].

    Evaluated here in an algebraically identical form built on
    sin((w - w_S) t / 2) / (w - w_S), which stays finite and cancellation
    free through the removable resonance at w = w_S.
    """
    omega = np.asarray(omega, dtype=float)
    ws = p.omega_s
    u = omega - ws
    sig = (t / 2.0) * np.sinc(u * t / (2.0 * np.pi))
    bracket = (
        4.0 * sig**2
        + (4.0 / omega) * sig * np.cos((omega + ws) * t / 2.0) * np.sin(ws * t)
        + (np.sin(ws * t) / omega) ** 2
    )
    dens = (
        (p.m_s * p.gamma0 / (np.pi * p.hbar))
        * omega**3
        / (omega + ws) ** 2
        * bracket
    )
    return np.maximum(dens, 0.0)


def band_area_increase(
    omega_lo: float, omega_hi: float, t: float, p: TheoryParams
) -> float:
    """Squared-area increase of one band group from its integrated density."""
    d, err = quad(
        lambda w: decoherence_density_driven(w, t, p), omega_lo, omega_hi, limit=200
    )
    return (8.0 * p.spatial_variance / p.hbar) * d


def system_area_increase(t: float, p: TheoryParams) -> float:
    """Squared-area increase of the system: (8 Dx^2 / hbar) integral of the density."""
    if t == 0.0:
        return 0.0
    f = lambda w: decoherence_density_driven(w, t, p)
    total = 0.0
    for lo, hi in ((0.0, min(p.omega_s, p.cutoff)), (min(p.omega_s, p.cutoff), p.cutoff)):
        if hi <= lo:
            continue
        val, err = quad(f, lo, hi, limit=400, epsrel=1e-8, epsabs=0.0)
        if val > 0 and err > 1e-6 * val:
            raise IntegrationError(
                f"decoherence integral on [{lo}, {hi}] reached only {err/val} relative"
            )
        total += val
    return (8.0 * p.spatial_variance / p.hbar) * total


def system_entropy(t: float, p: TheoryParams) -> float:
    """Predicted system entropy H_S(t) in nats."""
    return entropy_from_area(math.sqrt(1.0 + system_area_increase(t, p)))


def pip_plateau(fraction: float, h_system: float) -> float:
    """Plateau law for the partial-information curve.

    I(f) ~ H_S + (1/2) ln(f / (1 - f)), clamped to the physical range
    [0, 2 H_S]; exact antisymmetry about f = 1/2 by construction.
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError("fraction must lie in (0, 1)")
    val = h_system + 0.5 * math.log(fraction / (1.0 - fraction))
    return min(max(val, 0.0), 2.0 * h_system)


def redundancy_exact(delta: float, h_system: float) -> float:
    """R_delta = 1 / f_delta with f_delta = e^(-2 d H_S) / (1 + e^(-2 d H_S))."""
    _check_delta(delta)
    return 1.0 + math.exp(2.0 * delta * h_system)


def redundancy_approx(delta: float, h_system: float) -> float:
    """Leading form R_delta ~ e^(2 delta H_S)."""
    _check_delta(delta)
    return math.exp(2.0 * delta * h_system)


def redundancy_from_squeezing(delta: float, squeeze: float) -> float:
    """Squeeze scaling R_delta ~ s^(2 delta), from H_S ~ ln s after decoherence."""
    _check_delta(delta)
    if squeeze < 1.0:
        raise ValueError("squeeze must be >= 1")
    return squeeze ** (2.0 * delta)


def _check_delta(delta: float) -> None:
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
