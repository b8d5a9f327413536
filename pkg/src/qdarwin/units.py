"""Simulation units.

Everything in this package works in units where hbar/2 = 1, band masses
are 1, and frequencies are plain angular frequencies.  The value of hbar
is read from this module everywhere; nothing else hardcodes it.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class UnitsConfig:
    """Unit system marker.  hbar is fixed at 2 so that hbar/2 = 1."""

    hbar: float = 2.0

    def __post_init__(self):
        if self.hbar != 2.0:
            raise ValueError("simulation units require hbar = 2 (hbar/2 = 1)")


UNITS = UnitsConfig()
HBAR = UNITS.hbar
