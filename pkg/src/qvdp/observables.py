"""Synchronization observables of a density matrix.

The synchronization measure is the mean resultant length of the optical
phase distribution, S = |<e^{i phi}>|, with mean direction mu = arg<e^{i phi}>.
For a Fock-basis density matrix the first circular moment is the sum of the
first subdiagonal, which avoids any explicit phase-operator construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

#: Below this MRL the mean direction is numerically meaningless.
PHASE_UNDEFINED_S = 1e-12

DEFAULT_PHASE_POINTS = 1024


def first_circular_moment(rho: np.ndarray) -> complex:
    """<e^{i phi}> = sum_n rho[n+1, n]."""
    return complex(np.sum(np.diagonal(rho, offset=-1)))


def sync_measure(rho: np.ndarray) -> tuple[float, float]:
    """(S, mu): mean resultant length and mean direction.

    mu is reported as 0.0 when S < PHASE_UNDEFINED_S (phase undefined).
    """
    c = first_circular_moment(rho)
    S = abs(c)
    mu = float(np.angle(c)) if S >= PHASE_UNDEFINED_S else 0.0
    return S, mu


def phase_distribution(rho: np.ndarray, n_points: int = DEFAULT_PHASE_POINTS
                       ) -> np.ndarray:
    """P(phi_k) on a uniform grid phi_k in [0, 2pi), as an (n_points, 2) array.

    P(phi) = (1/2pi) sum_{m,n} e^{i(n-m)phi} rho_mn, the projection onto the
    (unnormalized) phase states |phi> = sum_n e^{i n phi}|n>.
    """
    if n_points < 16:
        raise ConfigError(f"n_points must be >= 16, got {n_points}")
    dim = rho.shape[0]
    phi = np.linspace(0.0, 2 * np.pi, n_points, endpoint=False)
    e = np.exp(1j * np.outer(np.arange(dim), phi))   # e[n, k] = e^{i n phi_k}
    # <phi|rho|phi> = sum_mn conj(e[m]) rho_mn e[n]
    P = np.einsum("mk,mn,nk->k", e.conj(), rho, e).real / (2 * np.pi)
    return np.column_stack([phi, P])


def amplitude(rho: np.ndarray) -> float:
    """Limit-cycle amplitude N = <a^dag a>."""
    n = np.arange(rho.shape[0])
    return float(np.sum(n * rho.diagonal().real))


def coherence(rho: np.ndarray, m: int, n: int) -> float:
    """|<m|rho|n>|."""
    dim = rho.shape[0]
    if not (0 <= m < dim and 0 <= n < dim):
        raise IndexError(f"coherence index ({m},{n}) out of range for dim {dim}")
    return float(abs(rho[m, n]))


@dataclass
class SyncReport:
    """All synchronization observables of one steady state."""

    S: float
    mu: float
    N: float
    phase_defined: bool
    coherences: dict[tuple[int, int], float] = field(default_factory=dict)
    phase_samples: np.ndarray | None = None

    @classmethod
    def from_state(cls, rho: np.ndarray,
                   coherence_pairs: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2)),
                   n_phase_points: int | None = None) -> "SyncReport":
        S, mu = sync_measure(rho)
        report = cls(
            S=S, mu=mu, N=amplitude(rho),
            phase_defined=S >= PHASE_UNDEFINED_S,
            coherences={(m, n): coherence(rho, m, n) for m, n in coherence_pairs},
        )
        if n_phase_points is not None:
            report.phase_samples = phase_distribution(rho, n_phase_points)
        return report
