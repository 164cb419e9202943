"""Steady-state power spectrum of the oscillator mode and entrainment.

Two independent pipelines compute the spectrum of <a^dag(tau) a(0)>_ss:

* eigen-decomposition of the Liouvillian, giving an exact mixture of
  Lorentzians S(w) = sum_k 2 Re[w_k / (i w - lambda_k)] (primary), and
* direct propagation of a rho_ss under exp(L tau) followed by quadrature of
  2 Re int e^{-i w tau} g(tau) dtau (cross-check).

The coherent part (eigenvalues at zero, nonzero <a>_ss under drive) is a
delta peak at w = 0 in the rotating frame; it is removed before locating
the incoherent (limit-cycle) peak frequency delta_obs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import fock
from .errors import StiffnessError
from .liouvillian import Liouvillian, SystemParams, build_liouvillian, choose_dim, solve_steady_built

#: |lambda| below this multiple of the rate scale is treated as the
#: stationary (coherent) eigenvalue.
ZERO_EIG_REL = 1e-8


@dataclass
class SpectrumResult:
    freqs: np.ndarray
    density: np.ndarray
    delta_obs: float | None      # None when delta == 0 (entrainment undefined)
    delta_rel: float | None      # (delta_obs - delta) / delta
    N: float
    coherent_weight: float       # |<a>_ss|^2 removed before peak finding
    incoherent_weight: float     # N - |<a>_ss|^2


@dataclass
class _Modes:
    lambdas: np.ndarray          # incoherent eigenvalues (Re < 0)
    weights: np.ndarray          # residues of g(tau)
    coherent: complex            # long-time limit <a^dag>_ss <a>_ss
    N: float
    rho_ss: np.ndarray
    dim: int


def _decompose(params: SystemParams, dim: int | None = None) -> _Modes:
    if dim is None:
        dim = choose_dim(params)
    liou = build_liouvillian(params, dim)
    st = solve_steady_built(liou)
    a = fock.annihilation(dim)
    v0 = (a @ st.rho).reshape(-1, order="F")

    lam, V = np.linalg.eig(liou.dense())
    c = np.linalg.solve(V, v0)
    modes = V.reshape(dim, dim, -1, order="F")
    # residues w_k = Tr(a^dag mode_k) c_k
    wts = np.einsum("mn,mnk->k", np.conj(a), modes) * c

    scale = params.rate_scale() * dim
    zero = np.abs(lam) < ZERO_EIG_REL * scale
    N = float(np.sum(np.arange(dim) * st.rho.diagonal().real))
    return _Modes(
        lambdas=lam[~zero],
        weights=wts[~zero],
        coherent=complex(np.sum(wts[zero])),
        N=N,
        rho_ss=st.rho,
        dim=dim,
    )


def correlation(params: SystemParams, taus: np.ndarray,
                dim: int | None = None) -> np.ndarray:
    """g(tau) = Tr(a^dag exp(L tau)[a rho_ss]) on a uniform tau >= 0 grid."""
    taus = np.asarray(taus, dtype=float)
    if taus.ndim != 1 or taus[0] < 0:
        raise ValueError("taus must be a 1-d grid of times >= 0")
    if dim is None:
        dim = choose_dim(params)
    liou = build_liouvillian(params, dim)
    st = solve_steady_built(liou)
    a = fock.annihilation(dim)
    v = (a @ st.rho).reshape(-1, order="F")

    steps = np.diff(taus)
    uniform = steps.size > 0 and np.allclose(steps, steps[0], rtol=1e-12, atol=0)
    g = np.empty(taus.size, dtype=complex)

    def trace_adag(vec):
        return np.sum(np.conj(a) * vec.reshape(dim, dim, order="F"))

    if uniform:
        P = expm(liou.dense() * steps[0])
        if taus[0] != 0:
            v = expm(liou.dense() * taus[0]) @ v
        for i in range(taus.size):
            g[i] = trace_adag(v)
            if i + 1 < taus.size:
                v = P @ v
    else:
        Ld = liou.dense()
        for i, t in enumerate(taus):
            g[i] = trace_adag(expm(Ld * t) @ v)
    if not np.all(np.isfinite(g)):
        raise StiffnessError("correlation propagation diverged")
    return g


def correlation_spectrum(params: SystemParams, freqs: np.ndarray,
                         dim: int | None = None,
                         n_tau: int = 4096) -> np.ndarray:
    """Cross-check spectrum from the propagated correlation function.

    The coherent long-time plateau is subtracted before the one-sided
    Fourier quadrature so the result matches the incoherent eigen spectrum.
    """
    if dim is None:
        dim = choose_dim(params)
    m = _decompose(params, dim)
    slowest = np.min(-m.lambdas.real[np.abs(m.weights) > 1e-14 * max(1.0, m.N)])
    T = 40.0 / slowest
    taus = np.linspace(0.0, T, n_tau)
    g = correlation(params, taus, dim=dim) - m.coherent
    phase = np.exp(-1j * np.outer(np.asarray(freqs), taus))
    return 2.0 * np.real(np.trapezoid(phase * g, taus, axis=1))


def default_grid(params: SystemParams, modes: _Modes,
                 max_points: int = 20001) -> np.ndarray:
    span = 4 * abs(params.delta) + 10 * params.gamma1
    active = np.abs(modes.weights) > 1e-12 * max(1.0, modes.N)
    narrowest = np.min(-modes.lambdas.real[active]) if active.any() else params.gamma1
    n = int(min(max_points, max(2001, np.ceil(2 * span / (narrowest / 10)))))
    return np.linspace(-span, span, n)


def _eigen_density(modes: _Modes, freqs: np.ndarray) -> np.ndarray:
    # S(w) = sum_k 2 Re[w_k / (i w - lambda_k)]
    denom = 1j * freqs[:, None] - modes.lambdas[None, :]
    return 2.0 * np.real(np.sum(modes.weights[None, :] / denom, axis=1))


def _refine_peak(freqs: np.ndarray, density: np.ndarray) -> float:
    i = int(np.argmax(density))
    if 0 < i < freqs.size - 1:
        y0, y1, y2 = density[i - 1], density[i], density[i + 1]
        denom = y0 - 2 * y1 + y2
        if denom < 0:
            return float(freqs[i] + 0.5 * (y0 - y2) / denom * (freqs[i] - freqs[i - 1]))
    return float(freqs[i])


def power_spectrum(params: SystemParams, freqs: np.ndarray | None = None,
                   dim: int | None = None) -> SpectrumResult:
    """Incoherent power spectrum with the entrained peak frequency."""
    modes = _decompose(params, dim)
    if freqs is None:
        freqs = default_grid(params, modes)
    else:
        freqs = np.asarray(freqs, dtype=float)
    density = _eigen_density(modes, freqs)

    peak = _refine_peak(freqs, density)
    if params.delta != 0:
        delta_obs: float | None = peak
        delta_rel: float | None = (peak - params.delta) / params.delta
    else:
        delta_obs = delta_rel = None
    a_mean = np.abs(modes.coherent)
    return SpectrumResult(
        freqs=freqs,
        density=density,
        delta_obs=delta_obs,
        delta_rel=delta_rel,
        N=modes.N,
        coherent_weight=float(a_mean),
        incoherent_weight=float(modes.N - a_mean),
    )


def spectral_weight(result: SpectrumResult) -> float:
    """Trapezoidal integral of the density over the stored grid."""
    return float(np.trapezoid(result.density, result.freqs))
