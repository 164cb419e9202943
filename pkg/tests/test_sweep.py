"""Sweep configuration, CSV output, presets, and the CLI."""
import json
import math
import os

import numpy as np
import pytest

from qvdp import cli, presets
from qvdp.errors import ConfigError
from qvdp.sweep import (
    Axis,
    COLUMNS,
    ScenarioConfig,
    compute_point,
    params_from_ratios,
    run_scenario,
)


SMALL = ScenarioConfig(
    name="small",
    axes=(Axis("Omega_ratio", 0.1, 0.3, 3, "linear"),),
    fixed={"gamma2_ratio": 100.0, "delta_ratio": 0.5},
    outputs=("N_numeric", "S_numeric", "mu_numeric"),
)


def read_csv(path):
    comments, header, rows = [], None, []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                comments.append(line)
            elif header is None:
                header = line.split(",")
            else:
                rows.append(line.split(","))
    return comments, header, rows


class TestAxis:
    def test_linear_values(self):
        ax = Axis("delta_ratio", -1.0, 1.0, 5)
        assert np.allclose(ax.values(), [-1, -0.5, 0, 0.5, 1])

    def test_log_values(self):
        ax = Axis("gamma2_ratio", 1.0, 100.0, 3, "log")
        assert np.allclose(ax.values(), [1, 10, 100])

    def test_validation(self):
        with pytest.raises(ConfigError):
            Axis("bogus", 0, 1, 3)
        with pytest.raises(ConfigError):
            Axis("kappa_ratio", 0, 1, 1)
        with pytest.raises(ConfigError):
            Axis("gamma2_ratio", 0.0, 1.0, 3, "log")
        with pytest.raises(ConfigError):
            Axis("kappa_ratio", 1.0, 0.0, 3)


class TestScenarioConfig:
    def test_roundtrip(self):
        cfg = presets.get_preset("fig2a")
        again = ScenarioConfig.from_dict(json.loads(json.dumps(cfg.to_dict())))
        assert again == cfg
        assert again.config_hash() == cfg.config_hash()

    def test_grid_order_outer_major(self):
        cfg = ScenarioConfig(
            name="g",
            axes=(Axis("gamma2_ratio", 1, 10, 2, "log"),
                  Axis("delta_ratio", 0, 1, 3)),
            outputs=("N_numeric",),
        )
        pts = cfg.grid()
        assert len(pts) == 6
        assert [p["gamma2_ratio"] for p in pts] == [1, 1, 1, 10, 10, 10]
        assert [p["delta_ratio"] for p in pts[:3]] == [0, 0.5, 1]

    def test_validation(self):
        with pytest.raises(ConfigError):
            ScenarioConfig(name="x", axes=(), outputs=("N_numeric",))
        with pytest.raises(ConfigError):
            ScenarioConfig(name="x", axes=(Axis("kappa_ratio", 0, 1, 3),),
                           fixed={"kappa_ratio": 1.0}, outputs=("N_numeric",))
        with pytest.raises(ConfigError):
            ScenarioConfig(name="x", axes=(Axis("kappa_ratio", 0, 1, 3),),
                           outputs=("bogus_column",))
        with pytest.raises(ConfigError):
            ScenarioConfig(name="x", axes=(Axis("kappa_ratio", 0, 1, 3),),
                           outputs=("N_numeric",), omega_policy="threshold")

    def test_params_from_ratios(self):
        p = params_from_ratios({"gamma2_ratio": 5.0, "delta_ratio": -1.0})
        assert p.gamma1 == 1.0 and p.gamma2 == 5.0 and p.delta == -1.0
        assert p.Omega == 0.0


class TestComputePoint:
    def test_outputs_present(self):
        row = compute_point(SMALL, SMALL.grid()[0])
        assert row["error"] == ""
        assert row["dim_used"] > 0
        assert row["residual"] < 1e-10
        assert all(math.isfinite(row[c]) for c in SMALL.outputs)

    def test_error_isolation(self):
        # gamma2 = 0 with kappa < gamma1 has no steady state; the row must
        # carry the error instead of raising
        cfg = ScenarioConfig(
            name="bad",
            axes=(Axis("Omega_ratio", 0.1, 0.2, 2),),
            fixed={"gamma2_ratio": 0.0},
            outputs=("N_numeric",),
        )
        row = compute_point(cfg, cfg.grid()[0])
        assert "PureGainError" in row["error"]
        assert math.isnan(row["N_numeric"])

    def test_threshold_policy_sets_drive(self):
        cfg = ScenarioConfig(
            name="th",
            axes=(Axis("kappa_ratio", 0.0, 1.0, 2),),
            fixed={"gamma2_ratio": 100.0},
            outputs=("S_numeric",),
            epsilon=0.1, omega_policy="threshold",
        )
        row = compute_point(cfg, cfg.grid()[0])
        assert row["Omega_ratio"] > 0
        assert row["error"] == ""

    def test_every_column_evaluates(self):
        cfg = ScenarioConfig(
            name="all",
            axes=(Axis("Omega_ratio", 0.2, 0.3, 2),),
            fixed={"gamma2_ratio": 50.0, "delta_ratio": 0.5,
                   "kappa_ratio": 0.0, "eta_ratio": 0.0},
            outputs=tuple(sorted(COLUMNS)),
            epsilon=0.1,
        )
        row = compute_point(cfg, cfg.grid()[0])
        assert row["error"] == ""
        for col in COLUMNS:
            assert isinstance(row[col], float)


class TestRunScenario:
    def test_csv_structure(self, tmp_path):
        path, failed = run_scenario(SMALL, str(tmp_path))
        assert failed == 0
        comments, header, rows = read_csv(path)
        assert any("config-sha256" in c for c in comments)
        assert header[:5] == ["gamma2_ratio", "kappa_ratio", "delta_ratio",
                              "Omega_ratio", "eta_ratio"]
        assert header[-3:] == ["dim_used", "residual", "error"]
        assert len(rows) == 3
        # 12 significant digits
        n_col = header.index("N_numeric")
        assert len(rows[0][n_col].replace(".", "").replace("-", "").lstrip("0")) >= 11

    def test_deterministic_across_workers(self, tmp_path):
        p1, _ = run_scenario(SMALL, str(tmp_path / "a"), workers=1)
        p2, _ = run_scenario(SMALL, str(tmp_path / "b"), workers=2)
        with open(p1, "rb") as f1, open(p2, "rb") as f2:
            assert f1.read() == f2.read()

    def test_failed_rows_counted(self, tmp_path):
        cfg = ScenarioConfig(
            name="bad",
            axes=(Axis("gamma2_ratio", 0.0, 100.0, 3),),
            fixed={"Omega_ratio": 0.1},
            outputs=("N_numeric",),
        )
        path, failed = run_scenario(cfg, str(tmp_path))
        assert failed == 1     # only the gamma2 = 0 point
        _, header, rows = read_csv(path)
        assert sum(1 for r in rows if r[header.index("error")]) == 1


class TestPresets:
    def test_count_and_names(self):
        names = presets.list_presets()
        assert len(names) == 13
        assert "fig1" in names and "fig4e-crossover" in names

    def test_all_valid(self):
        for name in presets.list_presets():
            cfg = presets.get_preset(name)
            assert cfg.name == name
            assert cfg.grid()

    def test_unknown(self):
        with pytest.raises(ConfigError):
            presets.get_preset("fig99")


class TestCli:
    def test_list(self, capsys):
        assert cli.main(["list"]) == 0
        out = capsys.readouterr().out
        assert "fig1" in out

    def test_export_preset_roundtrip(self, capsys):
        assert cli.main(["export-preset", "fig1"]) == 0
        d = json.loads(capsys.readouterr().out)
        assert ScenarioConfig.from_dict(d) == presets.get_preset("fig1")

    def test_run_config_file(self, tmp_path, capsys):
        cfg_path = tmp_path / "small.json"
        cfg_path.write_text(json.dumps(SMALL.to_dict()))
        assert cli.main(["run", str(cfg_path), "--out", str(tmp_path)]) == 0
        assert (tmp_path / "small.csv").exists()

    def test_run_env_default_out(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv(cli.DEFAULT_OUT_ENV, str(tmp_path))
        cfg_path = tmp_path / "small.json"
        cfg_path.write_text(json.dumps(SMALL.to_dict()))
        assert cli.main(["run", str(cfg_path)]) == 0
        assert (tmp_path / "small.csv").exists()

    def test_run_dim_override(self, tmp_path, capsys):
        cfg_path = tmp_path / "small.json"
        cfg_path.write_text(json.dumps(SMALL.to_dict()))
        assert cli.main(["run", str(cfg_path), "--out", str(tmp_path),
                         "--dim", "12"]) == 0
        _, header, rows = read_csv(tmp_path / "small.csv")
        assert all(r[header.index("dim_used")] == "12" for r in rows)

    def test_unknown_preset_exit_2(self, capsys):
        assert cli.main(["run", "fig99", "--out", "."]) == 2

    def test_bad_config_exit_2(self, tmp_path, capsys):
        cfg_path = tmp_path / "bad.json"
        cfg_path.write_text(json.dumps({"name": "bad", "axes": [
            {"name": "bogus", "min": 0, "max": 1, "n": 3}]}))
        assert cli.main(["run", str(cfg_path), "--out", str(tmp_path)]) == 2

    def test_failed_rows_exit_3(self, tmp_path, capsys):
        cfg = ScenarioConfig(
            name="allbad",
            axes=(Axis("Omega_ratio", 0.1, 0.2, 2),),
            fixed={"gamma2_ratio": 0.0},
            outputs=("N_numeric",),
        )
        cfg_path = tmp_path / "allbad.json"
        cfg_path.write_text(json.dumps(cfg.to_dict()))
        assert cli.main(["run", str(cfg_path), "--out", str(tmp_path)]) == 3
