"""Closed-form steady-state results for the harmonically driven oscillator.

These expressions come from a three-level ansatz for the steady-state
density matrix (populations of |0>,|1>,|2> plus the 0-1 coherence), valid
in the deep quantum regime gamma2/gamma1 >~ 10, together with its
deep-quantum-limit and noiseless reductions, the semi-classical
system-size-expansion amplitude, and the mean-field amplitude.  They serve
both as fast evaluators and as independent oracles for the numerical solver.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConfigError, DistortionBoundError, NotApplicableError
from .liouvillian import SystemParams

REGIME_LABELS = ("classical-limit", "semi-classical", "quantum",
                 "deep-quantum", "deep-quantum-limit")


@dataclass(frozen=True)
class AnalyticRegime:
    label: str
    method: str


def classify_regime(params: SystemParams) -> AnalyticRegime:
    """Damping-ratio regime and the analytic method that works there."""
    r = params.gamma2 / params.gamma1
    if r == 0:
        return AnalyticRegime("classical-limit", "mean-field")
    if r <= 0.1:
        return AnalyticRegime("semi-classical", "system size expansion")
    if r < 10:
        return AnalyticRegime("quantum", "none (numerics only)")
    if math.isinf(r):
        return AnalyticRegime("deep-quantum-limit", "density matrix ansatz")
    return AnalyticRegime("deep-quantum", "density matrix ansatz")


@dataclass(frozen=True)
class AnsatzState:
    """Steady-state elements of the three-level ansatz (harmonic drive only)."""

    rho00: float
    rho11: float
    rho22: float
    rho01: complex
    D: float

    @property
    def N(self) -> float:
        return self.rho11 + 2 * self.rho22

    @property
    def S(self) -> float:
        return abs(self.rho01)


def ansatz_elements(params: SystemParams) -> AnsatzState:
    """Exact steady-state elements of the ansatz for arbitrary gamma2 > 0."""
    if params.eta != 0:
        raise NotApplicableError("ansatz is derived for pure harmonic drive (eta = 0)")
    if params.gamma2 <= 0:
        raise ConfigError("ansatz requires gamma2 > 0 (limit cycle)")
    g1, g2, k = params.gamma1, params.gamma2, params.kappa
    d, W = params.delta, params.Omega

    D = (g1 * (4 * g1 * (d**2 + 4 * k**2 + 3 * W**2) + 15 * g1**2 * k
               + 9 * g1**3 + 4 * d**2 * k + 7 * k * (k**2 + 4 * W**2))
         + g2 * (3 * g1 + k) * (6 * g1 * k + 9 * g1**2 + 4 * d**2 + k**2 + 8 * W**2)
         + k**2 * (4 * d**2 + k**2 + 8 * W**2))

    rho00 = (2 * g1 * (g2 * (4 * (d**2 + k**2) + 6 * W**2) + 3 * k * (k**2 + 2 * W**2))
             + k * (g2 + k) * (4 * d**2 + k**2 + 4 * W**2)
             + 3 * g1**2 * k * (7 * g2 + 3 * k) + 18 * g2 * g1**3) / D
    core = g1 * (6 * g1 * k + 9 * g1**2 + 4 * d**2 + k**2 + 12 * W**2) + 4 * k * W**2
    rho11 = (g2 + k) * core / D
    rho22 = g1 * core / D
    rho01 = (-2 * W * (g1 * (g2 - k) + k * (g2 + k))
             * (-3j * g1 + 2 * d - 1j * k)) / D
    return AnsatzState(rho00=rho00, rho11=rho11, rho22=rho22, rho01=rho01, D=D)


def amplitude_closed(params: SystemParams, regime: AnalyticRegime | str) -> float:
    """Closed-form limit-cycle amplitude N for the given regime/method.

    Accepted methods: "deep-quantum-limit" (driven, gamma2 -> infinity),
    "undriven" (ansatz, any gamma2 > 0), "undriven-deep-quantum-limit",
    "sse" (system size expansion), "mean-field".
    """
    method = regime.label if isinstance(regime, AnalyticRegime) else regime
    g1, g2, k = params.gamma1, params.gamma2, params.kappa
    d, W = params.delta, params.Omega

    if method == "deep-quantum-limit":
        q = 6 * g1 * k + 9 * g1**2 + 4 * d**2 + k**2
        return ((g1 * (q + 12 * W**2) + 4 * k * W**2)
                / ((3 * g1 + k) * (q + 8 * W**2)))
    if method == "undriven":
        if g2 <= 0:
            raise ConfigError("undriven ansatz amplitude requires gamma2 > 0")
        return (g1 * (2 * g1 + g2 + k)
                / (g1 * (3 * g2 + k) + k * (g2 + k) + g1**2))
    if method == "undriven-deep-quantum-limit":
        return g1 / (3 * g1 + k)
    if method == "sse":
        if g2 <= 0:
            raise ConfigError("system size expansion requires gamma2 > 0")
        return (g1 + 2 * g2 - k) / (2 * g2)
    if method == "mean-field":
        if g2 <= 0:
            raise ConfigError("mean-field amplitude requires gamma2 > 0")
        # Stationary |alpha|^2 of d(alpha)/dt = (g1-k)/2 alpha - g2|alpha|^2 alpha - i(d alpha + W);
        # undriven fixed point, zero below the lasing threshold.
        return max(0.0, (g1 - k) / (2 * g2))
    raise ConfigError(f"unknown amplitude method {method!r}")


def _rho01_deep_quantum_limit(params: SystemParams) -> complex:
    """gamma2 -> infinity limit of the ansatz 0-1 coherence (complex)."""
    g1, k, d, W = params.gamma1, params.kappa, params.delta, params.Omega
    q = 6 * g1 * k + 9 * g1**2 + 4 * d**2 + k**2 + 8 * W**2
    return -2 * W * (g1 + k) * (-3j * g1 + 2 * d - 1j * k) / ((3 * g1 + k) * q)


def sync_closed(params: SystemParams, limit: str = "deep-quantum-limit"
                ) -> tuple[float, float]:
    """(S, mu) from the closed forms.

    limit = "deep-quantum-limit": gamma2 -> infinity, any kappa;
    limit = "noiseless": kappa -> 0, any gamma2 > 0 (quantum regime formula).

    mu is the argument of <e^{i phi}> = conj(rho01), which matches the
    numerical solver's convention; the single-branch arctan form
    -arctan((kappa+3*gamma1)/(2*delta)) agrees with it modulo pi.
    """
    g1, g2, k = params.gamma1, params.gamma2, params.kappa
    d, W = params.delta, params.Omega
    if limit == "deep-quantum-limit":
        rho01 = _rho01_deep_quantum_limit(params)
    elif limit == "noiseless":
        if k != 0:
            raise NotApplicableError("noiseless closed form requires kappa = 0")
        if g2 <= 0:
            raise ConfigError("noiseless closed form requires gamma2 > 0")
        # kappa -> 0 limit of the ansatz coherence; its magnitude is
        # 2 g2 W sqrt(9 g1^2 + 4 d^2) / (4 g1 (d^2 + 3 W^2)
        #   + 3 g2 (9 g1^2 + 4 d^2 + 8 W^2) + 9 g1^3).
        D0 = g1 * (4 * g1 * (d**2 + 3 * W**2) + 9 * g1**3) \
            + 3 * g2 * g1 * (9 * g1**2 + 4 * d**2 + 8 * W**2)
        rho01 = -2 * W * g1 * g2 * (-3j * g1 + 2 * d) / D0
    else:
        raise ConfigError(f"unknown limit {limit!r}")
    if W == 0 or abs(rho01) == 0:
        return 0.0, 0.0
    c = rho01.conjugate()             # <e^{i phi}> of the ansatz state
    return abs(c), cmath.phase(c)


def mu_arctan(params: SystemParams) -> float:
    """Arctan form of the mean direction, branch-resolved.

    The single-branch form -arctan((kappa+3*gamma1)/(2*delta)) fixes only the
    tangent; the branch consistent with the complex coherence (and with the
    delta -> 0 limit of -pi/2 by continuity) is the two-argument arctangent
    atan2(-(kappa+3*gamma1), -2*delta).
    """
    g1, k, d = params.gamma1, params.kappa, params.delta
    return math.atan2(-(k + 3 * g1), -2 * d)


def cardioid(phi, S: float, mu: float):
    """Deep-quantum-limit phase distribution (1/2pi)(1 + 2 S cos(phi - mu)).

    mu here is the actual mean direction (complex-argument convention), so
    the cosine enters with a plus sign; with the printed branch of the
    arctan form the same distribution reads (1/2pi)(1 - 2 S cos(phi - mu')).
    """
    import numpy as np
    return (1 + 2 * S * np.cos(np.asarray(phi) - mu)) / (2 * math.pi)


def epsilon_bound(params: SystemParams) -> float:
    """Largest attainable limit-cycle distortion under harmonic driving.

    Distortion here means the absolute amplitude change Delta N = N - N0 in
    the deep quantum limit; its supremum over all drive strengths is
    (gamma1+kappa)/(2(3*gamma1+kappa)), i.e. 1/6 in the noiseless case.
    """
    g1, k = params.gamma1, params.kappa
    return (g1 + k) / (2 * (3 * g1 + k))


def threshold_drive(params: SystemParams, epsilon: float) -> float:
    """Drive strength whose absolute amplitude change is Delta N = epsilon."""
    if epsilon <= 0:
        raise ConfigError(f"epsilon must be > 0, got {epsilon}")
    bound = epsilon_bound(params)
    if epsilon >= bound:
        raise DistortionBoundError(
            f"epsilon={epsilon} is at or above the attainable bound {bound:.6g}"
        )
    g1, k, d = params.gamma1, params.kappa, params.delta
    W2 = (epsilon * (3 * g1 + k) * (6 * g1 * k + 9 * g1**2 + 4 * d**2 + k**2)
          / (4 * (g1 * (1 - 6 * epsilon) + k * (1 - 2 * epsilon))))
    return math.sqrt(W2)


def boost_analysis(params: SystemParams) -> tuple[float, bool]:
    """(dS/dkappa at kappa=0 in the deep quantum limit, boost possible?).

    The derivative is for resonant driving at fixed Omega; the boolean is
    the necessary condition gamma2/gamma1 > 1 - 3/(4 (delta/gamma1)^2 + 12)
    for noise to enhance synchronization at finite gamma2.
    """
    if params.Omega <= 0:
        raise ConfigError("boost analysis requires Omega > 0")
    g1, W = params.gamma1, params.Omega
    dS = 2 * W * (3 * g1**2 + 8 * W**2) / (9 * g1**2 + 8 * W**2) ** 2
    ratio = params.gamma2 / g1
    possible = ratio > 1 - 3 / (4 * (params.delta / g1) ** 2 + 12)
    return dS, possible


def optimal_drive(params: SystemParams) -> float:
    """Resonant drive maximizing the deep-quantum-limit S at fixed kappa.

    Stationarity of the closed form gives Omega^2 = ((3 gamma1 + kappa)^2
    + ... )/8; concretely (9 g1^2 + 6 g1 k + k^2)/8.
    """
    g1, k = params.gamma1, params.kappa
    return math.sqrt((9 * g1**2 + 6 * g1 * k + k**2) / 8)
