"""Experiment driver.

Subcommands `pip`, `redundancy`, `bands`, and `all` evolve the configured
model and emit CSV files (plus a config-echo sidecar with a content hash)
into the output directory.  A plain key=value config file supplies
defaults; command-line flags win.  Exit codes: 0 ok, 2 config error,
3 physicality/model-instability error, 4 I/O error.
"""

import argparse
import hashlib
import os
import sys
import tempfile
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from . import evolution, information, theory
from .errors import ModelInstabilityError, PhysicalityError
from .gaussian import entropy_from_area
from .model import (
    BathSpec,
    SystemParams,
    build_bath,
    build_hamiltonian,
    initial_state,
    recurrence_time,
)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    m_s: float = 1000.0
    omega_s: float = 4.0
    squeezes: tuple = (6.3e3,)
    squeeze_axis: str = "x"
    x0: float = 0.0
    p0: float = 0.0
    m_s_gamma0: float = 25.0
    gamma0: float | None = None  # explicit value wins over m_s_gamma0 / m_s
    cutoff: float = 16.0
    n_bands: int = 128
    times: tuple = (4.0,)
    deltas: tuple = (0.1,)
    fractions: tuple = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    n_samples: int | None = None  # None: 200 for pip, 400 for redundancy
    band_width: int = 1
    seed: int = 1234
    out_dir: str = "results"
    allow_past_recurrence: bool = False
    reciprocal_of_mean: bool = False
    counterterm: bool = True

    @property
    def gamma0_value(self) -> float:
        return self.gamma0 if self.gamma0 is not None else self.m_s_gamma0 / self.m_s

    def validate(self) -> None:
        if not self.squeezes or not self.times or not self.deltas or not self.fractions:
            raise ConfigError("squeezes, times, deltas, fractions must be non-empty")
        if any(s < 1 for s in self.squeezes):
            raise ConfigError("squeeze factors must be >= 1")
        if any(not 0 < d < 1 for d in self.deltas):
            raise ConfigError("deltas must lie in (0, 1)")
        if any(not 0 < f < 1 for f in self.fractions):
            raise ConfigError("fractions must lie in (0, 1)")
        if self.n_bands < 1:
            raise ConfigError("n_bands must be >= 1")
        if self.gamma0_value < 0:
            raise ConfigError("gamma0 must be nonnegative")
        tau = 2.0 * np.pi * self.n_bands / self.cutoff
        late = [t for t in self.times if t >= tau]
        if late and not self.allow_past_recurrence:
            raise ConfigError(
                f"times {late} reach the recurrence time {tau:.4g}; "
                "increase n_bands or pass --allow-past-recurrence"
            )


_LIST_KEYS = {"squeezes", "times", "deltas", "fractions"}
_BOOL_KEYS = {"allow_past_recurrence", "reciprocal_of_mean", "counterterm"}
_INT_KEYS = {"n_bands", "seed", "band_width", "n_samples"}


def parse_config_file(path: str) -> dict:
    values: dict = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        field_names = {f.name for f in fields(ExperimentConfig)}
        if key not in field_names:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _coerce(key, val)
    return values


def _coerce(key: str, val: str):
    try:
        if key in _LIST_KEYS:
            return tuple(float(v) for v in val.split(",") if v.strip())
        if key in _BOOL_KEYS:
            if val.lower() in ("1", "true", "yes", "on"):
                return True
            if val.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(val)
        if key in _INT_KEYS:
            return int(val)
        if key in ("squeeze_axis", "out_dir"):
            return val
        return float(val)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {val!r}") from exc


def config_echo(cfg: ExperimentConfig) -> str:
    lines = []
    for f in sorted(fields(ExperimentConfig), key=lambda f: f.name):
        v = getattr(cfg, f.name)
        if isinstance(v, tuple):
            v = ",".join(f"{x:.17g}" for x in v)
        lines.append(f"{f.name}={v}")
    lines.append(f"gamma0_resolved={cfg.gamma0_value:.17g}")
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()
    return body + f"config_sha256={digest}\n"


def _fmt(x) -> str:
    if isinstance(x, float) and np.isnan(x):
        return "nan"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def write_csv(path: Path, header: list[str], rows: list[tuple]) -> None:
    """Write atomically: temp file in the same directory, then rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    text = ",".join(header) + "\n"
    for row in rows:
        text += ",".join(_fmt(v) for v in row) + "\n"
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _probe_output(out_dir: Path) -> None:
    """Fail with an I/O error before any computation if out_dir is unusable."""
    out_dir.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=out_dir, suffix=".probe")
    os.close(fd)
    os.unlink(tmp)


def _num(x: float) -> str:
    return f"{x:g}"


class _Runner:
    """Shared model setup: one bath, one Hamiltonian, one diagonalization."""

    def __init__(self, cfg: ExperimentConfig):
        cfg.validate()
        self.cfg = cfg
        self.bath: BathSpec = build_bath(
            cfg.m_s, cfg.gamma0_value, cfg.cutoff, cfg.n_bands
        )
        sys0 = self._system(cfg.squeezes[0])
        self.hamiltonian = build_hamiltonian(sys0, self.bath, cfg.counterterm)
        self.modes = evolution.normal_modes(self.hamiltonian)
        self._propagators: dict[float, evolution.Propagator] = {}

    def _system(self, squeeze: float) -> SystemParams:
        c = self.cfg
        return SystemParams(
            mass=c.m_s,
            omega=c.omega_s,
            squeeze=squeeze,
            squeeze_axis=c.squeeze_axis,
            x0=c.x0,
            p0=c.p0,
        )

    def state(self, t: float, squeeze: float):
        if t not in self._propagators:
            self._propagators[t] = evolution.propagator(self.hamiltonian, t, self.modes)
        init = initial_state(self._system(squeeze), self.bath)
        return evolution.evolve(init, self._propagators[t])

    def theory_params(self, squeeze: float) -> theory.TheoryParams:
        c = self.cfg
        return theory.TheoryParams(
            m_s=c.m_s,
            gamma0=c.gamma0_value,
            omega_s=c.omega_s,
            cutoff=c.cutoff,
            spatial_variance=self._system(squeeze).spatial_variance,
        )


def run_pip(cfg: ExperimentConfig) -> list[Path]:
    """One CSV per (t, squeeze): f, I_mean, I_stderr, I_theory, H_S_numeric, H_S_theory."""
    out = Path(cfg.out_dir)
    _probe_output(out)
    runner = _Runner(cfg)
    n_samples = cfg.n_samples or information.PIP_DEFAULT_SAMPLES
    paths = []
    for t in cfg.times:
        for s in cfg.squeezes:
            state = runner.state(t, s)
            curve = information.pip_curve(state, cfg.fractions, n_samples, cfg.seed)
            hs_th = theory.system_entropy(t, runner.theory_params(s))
            rows = [
                (
                    float(f),
                    float(im),
                    float(ie),
                    theory.pip_plateau(float(f), hs_th),
                    curve.h_system,
                    hs_th,
                )
                for f, im, ie in zip(curve.fractions, curve.mean_info, curve.std_err)
            ]
            path = out / f"pip_t{_num(t)}_s{_num(s)}.csv"
            write_csv(
                path,
                ["f", "I_mean", "I_stderr", "I_theory", "H_S_numeric", "H_S_theory"],
                rows,
            )
            paths.append(path)
    (out / "pip.meta").write_text(config_echo(cfg))
    return paths


def run_redundancy_sweep(cfg: ExperimentConfig) -> list[Path]:
    """Single CSV over the (s, delta, t) grid with numeric and theory redundancy."""
    out = Path(cfg.out_dir)
    _probe_output(out)
    runner = _Runner(cfg)
    n_samples = cfg.n_samples or information.REDUNDANCY_DEFAULT_SAMPLES
    rows = []
    for t in cfg.times:
        for s in cfg.squeezes:
            state = runner.state(t, s)
            tp = runner.theory_params(s)
            hs_th = theory.system_entropy(t, tp)
            for d in cfg.deltas:
                try:
                    res = information.redundancy(
                        state, d, n_samples, cfg.seed, cfg.reciprocal_of_mean
                    )
                    r_th = (
                        theory.redundancy_exact(d, hs_th) if hs_th > 0 else float("nan")
                    )
                    rows.append(
                        (
                            float(s),
                            float(d),
                            float(t),
                            res.r_delta,
                            res.std_err,
                            r_th,
                            _system_entropy_numeric(state),
                            "",
                        )
                    )
                except ValueError:
                    # undecohered state: no information to be redundant about
                    rows.append(
                        (
                            float(s),
                            float(d),
                            float(t),
                            float("nan"),
                            float("nan"),
                            float("nan"),
                            _system_entropy_numeric(state),
                            "H_S=0",
                        )
                    )
    path = out / "redundancy.csv"
    write_csv(
        path,
        ["s", "delta", "t", "R_numeric", "R_stderr", "R_theory", "H_S_numeric", "note"],
        rows,
    )
    (out / "redundancy.meta").write_text(config_echo(cfg))
    return [path]


def _system_entropy_numeric(state) -> float:
    from .gaussian import ModeSubset, entropy

    return entropy(state, ModeSubset([0]))


def run_band_spectrum(cfg: ExperimentConfig) -> list[Path]:
    """One CSV per time: omega, I_numeric, I_theory (first configured squeeze)."""
    out = Path(cfg.out_dir)
    _probe_output(out)
    runner = _Runner(cfg)
    s = cfg.squeezes[0]
    tp = runner.theory_params(s)
    dw_group = cfg.band_width * runner.bath.delta_omega
    paths = []
    for t in cfg.times:
        state = runner.state(t, s)
        spectrum = information.band_information_spectrum(
            state, runner.bath, cfg.band_width
        )
        rows = []
        for omega, i_num in spectrum:
            lo, hi = omega - dw_group / 2.0, omega + dw_group / 2.0
            da2 = theory.band_area_increase(lo, hi, t, tp) if t > 0 else 0.0
            i_th = entropy_from_area(float(np.sqrt(1.0 + da2)))
            rows.append((omega, i_num, i_th))
        path = out / f"bands_t{_num(t)}.csv"
        write_csv(path, ["omega", "I_numeric", "I_theory"], rows)
        paths.append(path)
    (out / "bands.meta").write_text(config_echo(cfg))
    return paths


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--out", help="output directory")
    p.add_argument("--seed", type=int, help="RNG seed")
    p.add_argument("--n-bands", type=int, help="number of bath bands")
    p.add_argument("--squeeze", help="comma list of squeeze factors")
    p.add_argument("--axis", choices=("x", "p"), help="squeeze axis")
    p.add_argument("--times", help="comma list of evolution times")
    p.add_argument("--delta", help="comma list of information deficits")
    p.add_argument("--fractions", help="comma list of fragment fractions")
    p.add_argument("--samples", type=int, help="Monte-Carlo samples per point")
    p.add_argument("--gamma0", type=float, help="frictional coupling frequency")
    p.add_argument("--m-s", type=float, help="system mass")
    p.add_argument("--band-width", type=int, help="bands per spectrum group")
    p.add_argument(
        "--allow-past-recurrence",
        action="store_true",
        default=None,
        help="permit times beyond 2 pi / delta_omega",
    )
    p.add_argument(
        "--reciprocal-of-mean",
        action="store_true",
        default=None,
        help="estimate R as 1/mean(f) instead of the default mean(1/f)",
    )


def _flag_overrides(args: argparse.Namespace) -> dict:
    over: dict = {}
    if args.out is not None:
        over["out_dir"] = args.out
    if args.seed is not None:
        over["seed"] = args.seed
    if args.n_bands is not None:
        over["n_bands"] = args.n_bands
    if args.squeeze is not None:
        over["squeezes"] = _coerce("squeezes", args.squeeze)
    if args.axis is not None:
        over["squeeze_axis"] = args.axis
    if args.times is not None:
        over["times"] = _coerce("times", args.times)
    if args.delta is not None:
        over["deltas"] = _coerce("deltas", args.delta)
    if args.fractions is not None:
        over["fractions"] = _coerce("fractions", args.fractions)
    if args.samples is not None:
        over["n_samples"] = args.samples
    if args.gamma0 is not None:
        over["gamma0"] = args.gamma0
    if args.m_s is not None:
        over["m_s"] = args.m_s
    if args.band_width is not None:
        over["band_width"] = args.band_width
    if args.allow_past_recurrence is not None:
        over["allow_past_recurrence"] = True
    if args.reciprocal_of_mean is not None:
        over["reciprocal_of_mean"] = True
    return over


def build_config(args: argparse.Namespace) -> ExperimentConfig:
    values: dict = {}
    if args.config:
        values.update(parse_config_file(args.config))
    values.update(_flag_overrides(args))
    try:
        cfg = ExperimentConfig(**values)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


_RECIPES = {
    "pip": (run_pip,),
    "redundancy": (run_redundancy_sweep,),
    "bands": (run_band_spectrum,),
    "all": (run_pip, run_redundancy_sweep, run_band_spectrum),
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qdarwin",
        description="Quantum Darwinism experiments on zero-temperature "
        "quantum Brownian motion",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("pip", "partial-information curves vs fragment fraction"),
        ("redundancy", "redundancy sweep over squeezing / deficit / time"),
        ("bands", "per-band information spectrum"),
        ("all", "run every recipe"),
    ):
        _add_common_flags(sub.add_parser(name, help=help_text))
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        for recipe in _RECIPES[args.command]:
            for path in recipe(cfg):
                print(path)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (PhysicalityError, ModelInstabilityError) as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
