import os
from pathlib import Path

import numpy as np
import pytest

from qdarwin.cli import (
    ConfigError,
    ExperimentConfig,
    main,
    parse_config_file,
)

FAST = [
    "--n-bands", "16",
    "--samples", "8",
    "--squeeze", "100",
    "--times", "0.5",
    "--fractions", "0.25,0.5",
    "--delta", "0.2",
    "--seed", "7",
]


def run(args):
    return main([a for a in args])


class TestConfigFile:
    def test_round_trip(self, tmp_path):
        cfg_file = tmp_path / "run.cfg"
        cfg_file.write_text(
            "# reference sweep\n"
            "n_bands = 32\n"
            "squeezes = 100,1000\n"
            "seed = 99\n"
            "allow_past_recurrence = true\n"
        )
        values = parse_config_file(str(cfg_file))
        assert values == {
            "n_bands": 32,
            "squeezes": (100.0, 1000.0),
            "seed": 99,
            "allow_past_recurrence": True,
        }

    def test_unknown_key_rejected(self, tmp_path):
        cfg_file = tmp_path / "run.cfg"
        cfg_file.write_text("bogus = 1\n")
        with pytest.raises(ConfigError):
            parse_config_file(str(cfg_file))

    def test_bad_value_rejected(self, tmp_path):
        cfg_file = tmp_path / "run.cfg"
        cfg_file.write_text("n_bands = many\n")
        with pytest.raises(ConfigError):
            parse_config_file(str(cfg_file))

    def test_flags_win_over_config(self, tmp_path, capsys):
        cfg_file = tmp_path / "run.cfg"
        cfg_file.write_text("n_bands = 32\nseed = 1\n")
        out = tmp_path / "out"
        code = run(
            ["pip", "--config", str(cfg_file), "--out", str(out)] + FAST
        )
        assert code == 0
        meta = (out / "pip.meta").read_text()
        assert "n_bands=16" in meta
        assert "seed=7" in meta
        assert "config_sha256=" in meta


class TestValidation:
    def test_recurrence_guard(self):
        cfg = ExperimentConfig(n_bands=16, times=(7.0,), cutoff=16.0)
        # tau_rec = 2 pi 16/16 ~ 6.28 < 7
        with pytest.raises(ConfigError):
            cfg.validate()
        ExperimentConfig(
            n_bands=16, times=(7.0,), cutoff=16.0, allow_past_recurrence=True
        ).validate()

    def test_exit_code_for_config_error(self, tmp_path):
        code = run(["pip", "--out", str(tmp_path / "o"), "--times", "1e9"])
        assert code == 2

    def test_exit_code_for_unstable_model(self, tmp_path):
        cfg_file = tmp_path / "run.cfg"
        cfg_file.write_text("counterterm = false\ngamma0 = 10\n")
        code = run(
            ["pip", "--config", str(cfg_file), "--out", str(tmp_path / "o")] + FAST
        )
        assert code == 3

    def test_exit_code_for_unwritable_output(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        code = run(["pip", "--out", str(blocker / "sub")] + FAST)
        assert code == 4


class TestPipRecipe:
    def test_emits_expected_schema(self, tmp_path):
        out = tmp_path / "out"
        assert run(["pip", "--out", str(out)] + FAST) == 0
        path = out / "pip_t0.5_s100.csv"
        lines = path.read_text().splitlines()
        assert lines[0] == "f,I_mean,I_stderr,I_theory,H_S_numeric,H_S_theory"
        assert len(lines) == 3
        row = lines[1].split(",")
        assert float(row[0]) == 0.25
        assert float(row[4]) > 0.0

    def test_time_zero_is_all_zero_information(self, tmp_path):
        out = tmp_path / "out"
        args = [a if a != "0.5" else "0" for a in FAST]
        assert run(["pip", "--out", str(out)] + args) == 0
        rows = (out / "pip_t0_s100.csv").read_text().splitlines()[1:]
        for row in rows:
            f, i_mean, i_err, i_th, hs_n, hs_t = map(float, row.split(","))
            assert abs(i_mean) < 1e-9
            assert i_th == 0.0
            assert abs(hs_n) < 1e-9 and hs_t == 0.0


class TestRedundancyRecipe:
    def test_emits_grid_rows(self, tmp_path):
        out = tmp_path / "out"
        assert run(["redundancy", "--out", str(out)] + FAST) == 0
        lines = (out / "redundancy.csv").read_text().splitlines()
        assert (
            lines[0]
            == "s,delta,t,R_numeric,R_stderr,R_theory,H_S_numeric,note"
        )
        s, d, t, r, rerr, rth, hs, note = lines[1].split(",")
        assert float(r) > 1.0 and note == ""

    def test_zero_coupling_diagnostic_row(self, tmp_path):
        out = tmp_path / "out"
        code = run(["redundancy", "--out", str(out), "--gamma0", "0"] + FAST)
        assert code == 0
        row = (out / "redundancy.csv").read_text().splitlines()[1].split(",")
        assert row[3] == "nan"
        assert row[7] == "H_S=0"
        assert float(row[6]) == 0.0


class TestBandsRecipe:
    def test_zero_coupling_gives_zero_columns(self, tmp_path):
        out = tmp_path / "out"
        code = run(["bands", "--out", str(out), "--gamma0", "0"] + FAST)
        assert code == 0
        rows = (out / "bands_t0.5.csv").read_text().splitlines()[1:]
        assert len(rows) == 16
        for row in rows:
            w, i_num, i_th = map(float, row.split(","))
            assert abs(i_num) < 1e-9 and i_th == 0.0

    def test_group_width(self, tmp_path):
        out = tmp_path / "out"
        code = run(["bands", "--out", str(out), "--band-width", "4"] + FAST)
        assert code == 0
        rows = (out / "bands_t0.5.csv").read_text().splitlines()[1:]
        assert len(rows) == 4


class TestDeterminismAndAll:
    def test_all_runs_every_recipe(self, tmp_path):
        out = tmp_path / "out"
        assert run(["all", "--out", str(out)] + FAST) == 0
        names = sorted(p.name for p in out.iterdir())
        assert "pip_t0.5_s100.csv" in names
        assert "redundancy.csv" in names
        assert "bands_t0.5.csv" in names

    def test_identical_seeds_reproduce_identical_bytes(self, tmp_path):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        assert run(["all", "--out", str(out1)] + FAST) == 0
        assert run(["all", "--out", str(out2)] + FAST) == 0
        for p1 in sorted(out1.glob("*.csv")):
            p2 = out2 / p1.name
            assert p1.read_bytes() == p2.read_bytes()

    def test_no_leftover_temp_files(self, tmp_path):
        out = tmp_path / "out"
        assert run(["pip", "--out", str(out)] + FAST) == 0
        assert not list(out.glob("*.tmp"))
