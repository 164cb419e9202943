"""Built-in sweep scenarios, one per reproduced figure or appendix map.

Axis ranges and drive strengths that are not printed in the source figures
are reconstructed best guesses; those presets carry a "reconstructed" note
and every preset can be exported to a JSON config and edited.
"""
from __future__ import annotations

from .errors import ConfigError
from .sweep import Axis, ScenarioConfig

_RECON = "reconstructed axis ranges / drive strengths (not printed in the figure)"


def _presets() -> dict[str, ScenarioConfig]:
    p = {}
    p["fig1"] = ScenarioConfig(
        name="fig1",
        axes=(Axis("gamma2_ratio", 1e-2, 1e3, 26, "log"),),
        fixed={"kappa_ratio": 0.0, "delta_ratio": 0.0,
               "Omega_ratio": 0.0, "eta_ratio": 0.0},
        outputs=("N_numeric", "N_eq5", "N_sse", "N_meanfield"),
    )
    for name, g2 in (("fig2a", 100.0), ("fig2b", 1000.0)):
        p[name] = ScenarioConfig(
            name=name,
            axes=(Axis("Omega_ratio", 0.1, 0.5, 3, "linear"),
                  Axis("delta_ratio", -2.0, 2.0, 41, "linear")),
            fixed={"gamma2_ratio": g2, "kappa_ratio": 0.0, "eta_ratio": 0.0},
            outputs=("S_numeric", "S_noiseless", "mu_numeric", "mu_closed",
                     "S_absdiff", "S_reldiff"),
            epsilon=0.1,
            notes="drive strengths reconstructed, kept below the eps=0.1 threshold",
        )
    for name, g2, wmax in (("fig3a", 1.0, 3.0), ("fig3b", 100.0, 1.5)):
        p[name] = ScenarioConfig(
            name=name,
            axes=(Axis("kappa_ratio", 0.0, 4.0, 17, "linear"),
                  Axis("Omega_ratio", 0.0, wmax, 16, "linear")),
            fixed={"gamma2_ratio": g2, "delta_ratio": 0.0, "eta_ratio": 0.0},
            outputs=("S_numeric", "Omega_th"),
            epsilon=0.1,
            notes=_RECON,
        )
    p["fig4ab-coherences"] = ScenarioConfig(
        name="fig4ab-coherences",
        axes=(Axis("gamma2_ratio", 1.0, 100.0, 2, "log"),
              Axis("kappa_ratio", 0.0, 4.0, 21, "linear")),
        fixed={"delta_ratio": 0.0, "eta_ratio": 0.0},
        outputs=("coh01", "coh02", "coh12", "S_numeric"),
        epsilon=0.1,
        omega_policy="threshold",
        notes="Omega set to the eps=0.1 threshold drive at each grid point",
    )
    p["fig4c-harmonic-entrainment"] = ScenarioConfig(
        name="fig4c-harmonic-entrainment",
        axes=(Axis("gamma2_ratio", 1.0, 100.0, 2, "log"),
              Axis("Omega_ratio", 0.2, 2.0, 10, "linear")),
        fixed={"kappa_ratio": 0.0, "delta_ratio": 1.0, "eta_ratio": 0.0},
        outputs=("delta_obs", "delta_rel"),
        notes=_RECON,
    )
    p["fig4d-squeeze-entrainment"] = ScenarioConfig(
        name="fig4d-squeeze-entrainment",
        axes=(Axis("gamma2_ratio", 1.0, 100.0, 2, "log"),
              Axis("eta_ratio", 0.2, 2.0, 10, "linear")),
        fixed={"kappa_ratio": 0.0, "delta_ratio": 1.0, "Omega_ratio": 0.0},
        outputs=("delta_obs", "delta_rel"),
        notes=_RECON,
    )
    p["fig4e-crossover"] = ScenarioConfig(
        name="fig4e-crossover",
        axes=(Axis("gamma2_ratio", 1.0, 1e3, 13, "log"),),
        fixed={"kappa_ratio": 0.0, "delta_ratio": 1.0,
               "Omega_ratio": 1.1, "eta_ratio": 1.1},
        outputs=("delta_rel_harmonic", "delta_rel_squeeze"),
        notes="equal drive strengths 1.1 gamma1 (reconstructed); "
              "crossover expected near gamma2/gamma1 ~ 13",
    )
    appendix_axes = (Axis("delta_ratio", -2.0, 2.0, 21, "linear"),
                     Axis("Omega_ratio", 0.05, 1.5, 15, "linear"))
    appendix_fixed = {"gamma2_ratio": 100.0, "kappa_ratio": 0.0, "eta_ratio": 0.0}
    p["appendix-arnold-diff"] = ScenarioConfig(
        name="appendix-arnold-diff",
        axes=appendix_axes, fixed=dict(appendix_fixed),
        outputs=("S_numeric", "S_noiseless", "S_absdiff", "S_reldiff",
                 "distortion", "in_threshold", "Omega_th"),
        epsilon=0.1, notes=_RECON,
    )
    p["appendix-distortion"] = ScenarioConfig(
        name="appendix-distortion",
        axes=appendix_axes, fixed=dict(appendix_fixed),
        outputs=("N_numeric", "N0_numeric", "distortion", "in_threshold", "Omega_th"),
        epsilon=0.1, notes=_RECON,
    )
    for name, col in (("appendix-coh02", "coh02"), ("appendix-coh12", "coh12")):
        p[name] = ScenarioConfig(
            name=name, axes=appendix_axes, fixed=dict(appendix_fixed),
            outputs=(col, "distortion", "in_threshold", "Omega_th"),
            epsilon=0.1, notes=_RECON,
        )
    return p


PRESETS = _presets()


def list_presets() -> list[str]:
    return sorted(PRESETS)


def get_preset(name: str) -> ScenarioConfig:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; valid presets: {', '.join(list_presets())}"
        ) from None
