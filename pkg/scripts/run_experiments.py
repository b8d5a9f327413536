#!/usr/bin/env python3
"""Regenerate the standard experiment datasets.

Produces, under the output directory:
  - redundancy.csv          R_0.1 vs squeezing and R_delta vs deficit grids
  - pip_t4_s*.csv           partial-information curves, three squeezings
  - bands_t*.csv            per-band information spectra (weak coupling)
"""

import argparse
import sys

from qdarwin.cli import main as qdarwin


def run(*args) -> None:
    code = qdarwin(list(args))
    if code != 0:
        sys.exit(code)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    ap.add_argument("--seed", type=int, default=20100401)
    ap.add_argument("--samples", type=int, default=None)
    args = ap.parse_args()
    seed = str(args.seed)
    samples = ["--samples", str(args.samples)] if args.samples else []

    # redundancy of 90% of the information vs squeezing, plus the growth
    # of R with the deficit at fixed squeezing
    run(
        "redundancy", "--out", args.out, "--seed", seed,
        "--squeeze", "100,1000,6300,10000", "--times", "4",
        "--delta", "0.05,0.1,0.15,0.2,0.25,0.3", *samples,
    )
    # plateau curves for three fully decohered squeezings
    run(
        "pip", "--out", args.out, "--seed", seed,
        "--squeeze", "63,630,6300", "--times", "4",
        "--fractions", "0.05,0.1,0.15,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.85,0.9,0.95",
        *samples,
    )
    # where the information sits in frequency, for a weakly coupled bath
    run(
        "bands", "--out", args.out, "--seed", seed,
        "--m-s", "10000", "--gamma0", "0.0025",
        "--squeeze", "6300", "--times", "0.6,4,30", *samples,
    )


if __name__ == "__main__":
    main()
