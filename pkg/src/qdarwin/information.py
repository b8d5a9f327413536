"""Mutual information, partial-information curves, and redundancy.

An observer holds a fragment: a subset of bath bands (never the system
itself).  Everything here is Monte Carlo over uniformly random fragments,
with one RNG stream per sample derived from (seed, sample index) so that
results do not depend on evaluation order or worker count.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InternalConsistencyError
from .gaussian import GaussianState, ModeSubset, entropy
from .model import BathSpec

PIP_DEFAULT_SAMPLES = 200
REDUNDANCY_DEFAULT_SAMPLES = 400


@dataclass(frozen=True)
class Fragment:
    """A set of bath bands accessible to one observer (mode indices >= 1)."""

    bands: ModeSubset

    def __post_init__(self):
        if len(self.bands) == 0:
            raise ValueError("fragment must contain at least one band")
        if self.bands.indices[0] < 1:
            raise ValueError("fragments contain bath modes only (index 0 is the system)")

    @staticmethod
    def of(indices) -> "Fragment":
        return Fragment(bands=ModeSubset(indices))


@dataclass(frozen=True)
class PipCurve:
    """Sampled partial-information curve: mean I(S:F) vs fragment fraction."""

    fractions: np.ndarray = field(repr=False)
    mean_info: np.ndarray = field(repr=False)
    std_err: np.ndarray = field(repr=False)
    n_samples: int = 0
    h_system: float = 0.0


@dataclass(frozen=True)
class RedundancyResult:
    """Redundancy estimate R_delta = 1 / f_delta with sampling uncertainty."""

    delta: float
    f_delta: float
    r_delta: float
    std_err: float
    n_samples: int


def _sample_rng(seed: int, *stream) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed,) + stream))


def mutual_information(state: GaussianState, frag: Fragment) -> float:
    """I(S:F) = H_S + H_F - H_SF in nats; clamped to be >= 0."""
    frag.bands.validate_for(state.n_modes)
    h_s = entropy(state, ModeSubset([0]))
    return _mutual_information_given_hs(state, frag.bands.indices, h_s)


def _mutual_information_given_hs(state, band_indices, h_s: float) -> float:
    h_f = entropy(state, ModeSubset(band_indices))
    h_sf = entropy(state, ModeSubset((0,) + tuple(band_indices)))
    return max(0.0, h_s + h_f - h_sf)


def pip_curve(
    state: GaussianState,
    fractions,
    n_samples: int = PIP_DEFAULT_SAMPLES,
    seed: int = 0,
) -> PipCurve:
    """Average I(S:F) over random fragments holding a fraction f of the bands.

    Fragment sizes are m = round(f N); each (fraction, sample) pair has
    its own deterministic RNG stream.
    """
    fractions = np.asarray(list(fractions), dtype=float)
    if fractions.size == 0:
        raise ValueError("need at least one fraction")
    if np.any(fractions <= 0) or np.any(fractions >= 1):
        raise ValueError("fractions must lie strictly inside (0, 1)")
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    n_bands = state.n_modes - 1
    sizes = np.array([round(f * n_bands) for f in fractions], dtype=int)
    if np.any(sizes == 0):
        f_min = 0.5 / n_bands
        raise ValueError(
            f"fraction below resolution: round(f*N) = 0; smallest usable f is {f_min}"
        )
    h_s = entropy(state, ModeSubset([0]))
    means = np.empty_like(fractions)
    errs = np.empty_like(fractions)
    for j, m in enumerate(sizes):
        vals = np.empty(n_samples)
        for i in range(n_samples):
            rng = _sample_rng(seed, j, i)
            bands = rng.choice(n_bands, size=m, replace=False) + 1
            vals[i] = _mutual_information_given_hs(state, np.sort(bands), h_s)
        means[j] = vals.mean()
        errs[j] = vals.std(ddof=1) / np.sqrt(n_samples) if n_samples > 1 else 0.0
    return PipCurve(
        fractions=fractions,
        mean_info=means,
        std_err=errs,
        n_samples=n_samples,
        h_system=h_s,
    )


def _crossing_fraction(state, perm, target: float, h_s: float) -> float:
    """Fraction of bands needed along one random band order to reach `target`.

    I(S:F) is nondecreasing as bands accumulate, so the first crossing is
    located by galloping + bisection and then linearly interpolated
    between the bracketing band counts.
    """
    n_bands = perm.size

    cache: dict[int, float] = {0: 0.0}

    def info(m: int) -> float:
        if m not in cache:
            cache[m] = _mutual_information_given_hs(state, np.sort(perm[:m]), h_s)
        return cache[m]

    # Gallop up to the first count at or past the target, then bisect;
    # I(S:F) never decreases as bands accumulate, so this finds the same
    # crossing as a linear scan.
    lo, hi = 0, 1
    while info(hi) < target:
        if hi == n_bands:
            raise InternalConsistencyError(
                f"I(S:E) = {info(n_bands)} never reached target {target}; "
                "the state or entropies are inconsistent"
            )
        lo, hi = hi, min(2 * hi, n_bands)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if info(mid) >= target:
            hi = mid
        else:
            lo = mid
    i_lo, i_hi = info(hi - 1), info(hi)
    frac_in_step = (target - i_lo) / (i_hi - i_lo) if i_hi > i_lo else 1.0
    return (hi - 1 + frac_in_step) / n_bands


def redundancy(
    state: GaussianState,
    delta: float,
    n_samples: int = REDUNDANCY_DEFAULT_SAMPLES,
    seed: int = 0,
    reciprocal_of_mean: bool = False,
) -> RedundancyResult:
    """Monte-Carlo redundancy R_delta of the system's record in the bath.

    Each sample accumulates bands in a uniformly random order until
    I(S:F) >= (1 - delta) H_S and records the (interpolated) fraction f
    used; 1/f is the number of such fragments the bath holds in that
    realization.  R is the mean of those counts, which reproduces the
    e^(2 delta H_S) and s^(2 delta) scaling laws; `reciprocal_of_mean`
    switches to the alternative estimator 1 / mean(f), which is smoother
    but flattens the scaling near the one-band resolution limit.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    h_s = entropy(state, ModeSubset([0]))
    if h_s <= 0.0:
        raise ValueError("system entropy is zero; redundancy is undefined")
    target = (1.0 - delta) * h_s
    n_bands = state.n_modes - 1
    fracs = np.empty(n_samples)
    for i in range(n_samples):
        rng = _sample_rng(seed, i)
        perm = rng.permutation(n_bands) + 1
        fracs[i] = _crossing_fraction(state, perm, target, h_s)
    if reciprocal_of_mean:
        f_delta = float(fracs.mean())
        f_err = float(fracs.std(ddof=1) / np.sqrt(n_samples)) if n_samples > 1 else 0.0
        r = 1.0 / f_delta
        r_err = f_err / f_delta**2
    else:
        r_samples = 1.0 / fracs
        r = float(r_samples.mean())
        r_err = (
            float(r_samples.std(ddof=1) / np.sqrt(n_samples)) if n_samples > 1 else 0.0
        )
        f_delta = 1.0 / r
    return RedundancyResult(
        delta=delta, f_delta=f_delta, r_delta=r, std_err=r_err, n_samples=n_samples
    )


def band_information_spectrum(
    state: GaussianState, bath: BathSpec, band_width: int = 1
) -> list[tuple[float, float]]:
    """I(S:E_w) per contiguous group of `band_width` bands, vs center frequency."""
    n_bands = state.n_modes - 1
    if bath.n_bands != n_bands:
        raise ValueError("bath does not match the state's band count")
    if band_width < 1 or n_bands % band_width != 0:
        raise ValueError(f"band_width must divide the band count {n_bands}")
    h_s = entropy(state, ModeSubset([0]))
    out = []
    for start in range(0, n_bands, band_width):
        modes = np.arange(start, start + band_width) + 1
        omega = float(bath.frequencies[start : start + band_width].mean())
        out.append((omega, _mutual_information_given_hs(state, modes, h_s)))
    return out
