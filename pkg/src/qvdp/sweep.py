"""Parameter-sweep scenarios and deterministic CSV output.

A scenario sweeps one or two parameter axes (ratios to gamma1), evaluates a
set of named observable columns at every grid point, and writes one CSV per
scenario.  Output is byte-identical across runs and worker counts: points
are computed in a deterministic grid order (outer axis major) and buffered
before the single-threaded writer emits them.
"""
from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import analytic, observables, spectrum
from .errors import ConfigError
from .liouvillian import SystemParams, solve_steady

AXIS_NAMES = ("gamma2_ratio", "kappa_ratio", "delta_ratio", "Omega_ratio", "eta_ratio")
PARAM_COLUMNS = AXIS_NAMES

NUMBER_FMT = "%.12g"


@dataclass(frozen=True)
class Axis:
    name: str
    min: float
    max: float
    n: int
    scale: str = "linear"

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise ConfigError(f"unknown axis {self.name!r}; valid: {AXIS_NAMES}")
        if self.n < 2:
            raise ConfigError(f"axis {self.name}: n must be >= 2, got {self.n}")
        if self.scale not in ("linear", "log"):
            raise ConfigError(f"axis {self.name}: scale must be linear or log")
        if self.scale == "log" and self.min <= 0:
            raise ConfigError(f"axis {self.name}: log scale requires min > 0")
        if self.max < self.min:
            raise ConfigError(f"axis {self.name}: max < min")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.logspace(math.log10(self.min), math.log10(self.max), self.n)
        return np.linspace(self.min, self.max, self.n)


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    axes: tuple[Axis, ...]
    fixed: dict[str, float] = field(default_factory=dict)
    outputs: tuple[str, ...] = ("N_numeric",)
    epsilon: float | None = None
    omega_policy: str = "fixed"       # "fixed" | "threshold"
    dim_override: int | None = None
    notes: str = ""

    def __post_init__(self):
        if not 1 <= len(self.axes) <= 2:
            raise ConfigError(f"scenario needs 1 or 2 axes, got {len(self.axes)}")
        axis_names = {ax.name for ax in self.axes}
        for key in self.fixed:
            if key not in AXIS_NAMES:
                raise ConfigError(f"unknown fixed parameter {key!r}")
            if key in axis_names:
                raise ConfigError(f"parameter {key} is both swept and fixed")
        if self.omega_policy not in ("fixed", "threshold"):
            raise ConfigError(f"unknown omega_policy {self.omega_policy!r}")
        if self.omega_policy == "threshold" and self.epsilon is None:
            raise ConfigError("omega_policy 'threshold' needs epsilon")
        for out in self.outputs:
            if out not in COLUMNS:
                raise ConfigError(
                    f"unknown output column {out!r}; valid: {sorted(COLUMNS)}"
                )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["axes"] = [asdict(ax) for ax in self.axes]
        d["outputs"] = list(self.outputs)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ScenarioConfig":
        d = dict(d)
        d["axes"] = tuple(Axis(**ax) for ax in d.get("axes", ()))
        d["outputs"] = tuple(d.get("outputs", ()))
        return cls(**d)

    def grid(self) -> list[dict[str, float]]:
        """Grid points in deterministic outer-axis-major order."""
        base = {name: 0.0 for name in AXIS_NAMES}
        base.update(self.fixed)
        points = []
        if len(self.axes) == 1:
            for v in self.axes[0].values():
                pt = dict(base)
                pt[self.axes[0].name] = float(v)
                points.append(pt)
        else:
            outer, inner = self.axes
            for vo in outer.values():
                for vi in inner.values():
                    pt = dict(base)
                    pt[outer.name] = float(vo)
                    pt[inner.name] = float(vi)
                    points.append(pt)
        return points

    def config_hash(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def params_from_ratios(pt: dict[str, float]) -> SystemParams:
    return SystemParams(
        gamma1=1.0,
        gamma2=pt.get("gamma2_ratio", 0.0),
        kappa=pt.get("kappa_ratio", 0.0),
        delta=pt.get("delta_ratio", 0.0),
        Omega=pt.get("Omega_ratio", 0.0),
        eta=pt.get("eta_ratio", 0.0),
    )


class PointContext:
    """Caches the expensive pieces shared between output columns."""

    def __init__(self, params: SystemParams, config: ScenarioConfig):
        self.params = params
        self.config = config
        self._steady = None
        self._undriven = None
        self._spectrum = None

    @property
    def steady(self):
        if self._steady is None:
            self._steady = solve_steady(self.params, dim=self.config.dim_override)
        return self._steady

    @property
    def undriven(self):
        if self._undriven is None:
            p0 = self.params.replace(Omega=0.0, eta=0.0, delta=0.0)
            self._undriven = solve_steady(p0, dim=self.config.dim_override)
        return self._undriven

    @property
    def spectrum(self):
        if self._spectrum is None:
            self._spectrum = spectrum.power_spectrum(
                self.params, dim=self.config.dim_override)
        return self._spectrum

    def omega_th(self) -> float:
        eps = self.config.epsilon if self.config.epsilon is not None else 0.1
        return analytic.threshold_drive(self.params, eps)

    def entrainment(self, kind: str) -> float:
        drive = max(self.params.Omega, self.params.eta)
        p = self.params.replace(
            Omega=drive if kind == "harmonic" else 0.0,
            eta=drive if kind == "squeeze" else 0.0,
        )
        r = spectrum.power_spectrum(p, dim=self.config.dim_override)
        return math.nan if r.delta_rel is None else r.delta_rel


def _sync_pair(ctx):
    return observables.sync_measure(ctx.steady.rho)


COLUMNS = {
    "N_numeric": lambda c: observables.amplitude(c.steady.rho),
    "N0_numeric": lambda c: observables.amplitude(c.undriven.rho),
    "N_eq5": lambda c: analytic.amplitude_closed(c.params, "undriven"),
    "N_sse": lambda c: analytic.amplitude_closed(c.params, "sse"),
    "N_meanfield": lambda c: analytic.amplitude_closed(c.params, "mean-field"),
    "N_dql": lambda c: analytic.amplitude_closed(c.params, "deep-quantum-limit"),
    "S_numeric": lambda c: _sync_pair(c)[0],
    "mu_numeric": lambda c: _sync_pair(c)[1],
    "S_noiseless": lambda c: analytic.sync_closed(c.params, "noiseless")[0],
    "S_dql": lambda c: analytic.sync_closed(c.params, "deep-quantum-limit")[0],
    "mu_closed": lambda c: analytic.mu_arctan(c.params),
    "S_absdiff": lambda c: abs(_sync_pair(c)[0]
                               - analytic.sync_closed(c.params, "noiseless")[0]),
    "S_reldiff": lambda c: (abs(_sync_pair(c)[0]
                                - analytic.sync_closed(c.params, "noiseless")[0])
                            / analytic.sync_closed(c.params, "noiseless")[0]),
    "coh01": lambda c: observables.coherence(c.steady.rho, 0, 1),
    "coh02": lambda c: observables.coherence(c.steady.rho, 0, 2),
    "coh12": lambda c: observables.coherence(c.steady.rho, 1, 2),
    "Omega_th": lambda c: c.omega_th(),
    "distortion": lambda c: abs(observables.amplitude(c.steady.rho)
                                - observables.amplitude(c.undriven.rho))
                            / observables.amplitude(c.undriven.rho),
    "in_threshold": lambda c: float(
        abs(observables.amplitude(c.steady.rho)
            - observables.amplitude(c.undriven.rho))
        / observables.amplitude(c.undriven.rho) <= (c.config.epsilon or 0.1)),
    "delta_obs": lambda c: (math.nan if c.spectrum.delta_obs is None
                            else c.spectrum.delta_obs),
    "delta_rel": lambda c: (math.nan if c.spectrum.delta_rel is None
                            else c.spectrum.delta_rel),
    "delta_rel_harmonic": lambda c: c.entrainment("harmonic"),
    "delta_rel_squeeze": lambda c: c.entrainment("squeeze"),
}


def compute_point(config: ScenarioConfig, pt: dict[str, float]) -> dict:
    """One SweepRow as a plain dict (picklable for worker pools)."""
    row = {name: pt.get(name, 0.0) for name in PARAM_COLUMNS}
    try:
        params = params_from_ratios(pt)
        if config.omega_policy == "threshold":
            params = params.replace(
                Omega=analytic.threshold_drive(params, config.epsilon))
            pt = dict(pt, Omega_ratio=params.Omega)
            row["Omega_ratio"] = params.Omega
        ctx = PointContext(params, config)
        for name in config.outputs:
            row[name] = COLUMNS[name](ctx)
        if ctx._steady is not None:
            row["dim_used"] = ctx.steady.dim
            row["residual"] = ctx.steady.residual
        else:
            # Spectrum-only rows pick their own truncation internally.
            row["dim_used"] = config.dim_override or 0
            row["residual"] = 0.0
        row["error"] = ""
    except Exception as exc:  # noqa: BLE001 - row-level fault isolation
        for name in config.outputs:
            row.setdefault(name, math.nan)
        row.setdefault("dim_used", 0)
        row.setdefault("residual", math.nan)
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _worker(args):
    config_dict, pt = args
    return compute_point(ScenarioConfig.from_dict(config_dict), pt)


def _format_value(v) -> str:
    if isinstance(v, str):
        if any(ch in v for ch in ',"\n'):
            return '"' + v.replace('"', '""') + '"'
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float) and math.isnan(v):
        return "nan"
    return NUMBER_FMT % v


def run_scenario(config: ScenarioConfig, out_dir: str,
                 workers: int = 1) -> tuple[str, int]:
    """Run a sweep and write `<out_dir>/<name>.csv`.

    Returns (csv_path, number_of_failed_rows).  Failed grid points are
    recorded with their error message and do not abort the run.
    """
    points = config.grid()
    if workers > 1:
        cd = config.to_dict()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_worker, [(cd, pt) for pt in points],
                                 chunksize=max(1, len(points) // (4 * workers))))
    else:
        rows = [compute_point(config, pt) for pt in points]

    header = list(PARAM_COLUMNS) + list(config.outputs) + ["dim_used", "residual", "error"]
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{config.name}.csv")
    lines = [
        f"# scenario: {config.name}",
        f"# config-sha256: {config.config_hash()}",
        f"# config: {json.dumps(config.to_dict(), sort_keys=True)}",
        f"# rows: {len(points)}",
    ]
    if config.notes:
        lines.append(f"# notes: {config.notes}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_format_value(row.get(h, "")) for h in header))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    failed = sum(1 for row in rows if row["error"])
    return path, failed
