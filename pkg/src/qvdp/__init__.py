"""Driven quantum van der Pol oscillator in the deep quantum regime.

Steady states of the Lindblad master equation, synchronization observables
(mean resultant length, phase distribution, entrained spectral peak), the
matching closed-form expressions, and reproducible parameter sweeps.
"""

from .analytic import (
    AnalyticRegime,
    AnsatzState,
    ansatz_elements,
    amplitude_closed,
    boost_analysis,
    classify_regime,
    epsilon_bound,
    sync_closed,
    threshold_drive,
)
from .liouvillian import (
    Liouvillian,
    SteadyState,
    SystemParams,
    build_liouvillian,
    choose_dim,
    evolve,
    solve_steady,
    steady_state,
)
from .observables import (
    SyncReport,
    amplitude,
    coherence,
    phase_distribution,
    sync_measure,
)
from .spectrum import SpectrumResult, correlation, power_spectrum
from .sweep import Axis, ScenarioConfig, run_scenario

__all__ = [
    "AnalyticRegime", "AnsatzState", "Axis", "Liouvillian", "ScenarioConfig",
    "SpectrumResult", "SteadyState", "SyncReport", "SystemParams",
    "amplitude", "amplitude_closed", "ansatz_elements", "boost_analysis",
    "build_liouvillian", "choose_dim", "classify_regime", "coherence",
    "correlation", "epsilon_bound", "evolve", "phase_distribution",
    "power_spectrum", "run_scenario", "solve_steady", "steady_state",
    "sync_closed", "sync_measure", "threshold_drive",
]

__version__ = "0.1.0"
