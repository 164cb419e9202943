"""Lindblad generator of the driven quantum van der Pol oscillator.

The master equation is

    drho/dt = -i[H, rho] + gamma1 D[a^dag]rho + gamma2 D[a^2]rho + kappa D[a]rho
    H = delta a^dag a + Omega (a + a^dag) + eta (a^2 + a^dag^2)

with D[L]rho = L rho L^dag - (L^dag L rho + rho L^dag L)/2.  The generator is
represented as a sparse matrix acting on column-stacked density matrices,
vec(A rho B) = (B^T kron A) vec(rho).

All rates are conventionally quoted in units of gamma1; nothing in this
module assumes gamma1 == 1, but the presets and analytics do.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.linalg import expm

from . import fock
from .errors import (
    ConfigError,
    DegenerateSteadyStateError,
    DimensionCapError,
    PureGainError,
    StiffnessError,
)

# Scaled residual accepted for a converged steady-state solve.
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class SystemParams:
    """Physical rates and drives, all in angular-frequency units.

    gamma1: single-photon pump rate (> 0, the unit of every preset)
    gamma2: two-photon loss rate (>= 0; needed for a limit cycle)
    kappa:  single-photon loss rate, the noise knob (>= 0)
    delta:  detuning omega_0 - omega_drive (any sign)
    Omega:  harmonic drive strength (>= 0)
    eta:    squeeze drive strength (>= 0)
    """

    gamma1: float = 1.0
    gamma2: float = 0.0
    kappa: float = 0.0
    delta: float = 0.0
    Omega: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        vals = (self.gamma1, self.gamma2, self.kappa,
                self.delta, self.Omega, self.eta)
        if any(not math.isfinite(v) for v in vals):
            raise ConfigError(f"non-finite parameter in {self}")
        if self.gamma1 <= 0:
            raise ConfigError(f"gamma1 must be > 0, got {self.gamma1}")
        for name in ("gamma2", "kappa", "Omega", "eta"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0, got {getattr(self, name)}")

    def replace(self, **kw) -> "SystemParams":
        d = self.__dict__.copy()
        d.update(kw)
        return SystemParams(**d)

    @property
    def undriven(self) -> bool:
        return self.Omega == 0.0 and self.eta == 0.0

    def rate_scale(self) -> float:
        return max(self.gamma1, self.gamma2, self.kappa,
                   abs(self.delta), self.Omega, self.eta)


@dataclass(frozen=True)
class Liouvillian:
    """Sparse superoperator for one parameter point and truncation."""

    params: SystemParams
    dim: int
    matrix: sp.csr_matrix

    def dense(self) -> np.ndarray:
        if self.dim > 80:
            raise StiffnessError(
                f"dense superoperator at dim={self.dim} would be too large"
            )
        return self.matrix.toarray()

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Action of the generator on a density matrix."""
        v = self.matrix @ rho.reshape(-1, order="F")
        return v.reshape(self.dim, self.dim, order="F")

    def spectral_gap(self) -> float:
        """Second-smallest singular value (steady-state uniqueness margin)."""
        s = np.linalg.svd(self.dense(), compute_uv=False)
        return float(s[-2])


def _dissipator(L: sp.spmatrix) -> sp.csr_matrix:
    n = L.shape[0]
    eye = sp.identity(n, dtype=complex, format="csr")
    LdL = (L.conj().T @ L).tocsr()
    out = sp.kron(L.conj(), L, format="csr")
    out = out - 0.5 * sp.kron(eye, LdL, format="csr")
    out = out - 0.5 * sp.kron(LdL.T, eye, format="csr")
    return out.tocsr()


def build_liouvillian(params: SystemParams, dim: int) -> Liouvillian:
    dim = fock.check_dim(dim)
    a = sp.csr_matrix(fock.annihilation(dim))
    ad = a.conj().T.tocsr()
    H = sp.csr_matrix(fock.hamiltonian(params.delta, params.Omega, params.eta, dim))
    eye = sp.identity(dim, dtype=complex, format="csr")

    L = -1j * (sp.kron(eye, H, format="csr") - sp.kron(H.T, eye, format="csr"))
    L = L + params.gamma1 * _dissipator(ad)
    if params.gamma2 > 0:
        L = L + params.gamma2 * _dissipator((a @ a).tocsr())
    if params.kappa > 0:
        L = L + params.kappa * _dissipator(a)
    L = L.tocsr()

    # Trace preservation: the trace functional must annihilate L from the left.
    trace_row = np.zeros(dim * dim, dtype=complex)
    trace_row[np.arange(dim) * (dim + 1)] = 1.0
    defect = np.max(np.abs(trace_row @ L))
    scale = max(1.0, params.rate_scale() * dim)
    if defect > 1e-10 * scale:
        raise AssertionError(
            f"trace functional is not a left null vector (defect {defect:.2e})"
        )
    return Liouvillian(params=params, dim=dim, matrix=L)


@dataclass(frozen=True)
class SteadyState:
    """Steady-state solve result with solver diagnostics."""

    rho: np.ndarray
    residual: float            # scaled max-norm of L vec(rho)
    hermitize_correction: float
    dim: int

    @property
    def populations(self) -> np.ndarray:
        return self.rho.diagonal().real.copy()


def _check_solvable(params: SystemParams):
    if params.gamma2 == 0 and params.kappa <= params.gamma1:
        raise PureGainError(
            "net linear gain with no two-photon loss: no normalizable steady state "
            f"(gamma2={params.gamma2}, kappa={params.kappa}, gamma1={params.gamma1})"
        )


def _diagonal_steady(params: SystemParams, dim: int) -> np.ndarray:
    """Populations of the U(1)-symmetric (undriven, delta-free sector) steady state.

    With Omega = eta = 0 the diagonal of rho decouples and obeys a banded
    classical master equation built from the same truncated jump operators,
    so the result is identical to the full superoperator solve.
    """
    ops = [(params.gamma1, fock.creation(dim))]
    if params.gamma2 > 0:
        a = fock.annihilation(dim)
        ops.append((params.gamma2, a @ a))
    if params.kappa > 0:
        ops.append((params.kappa, fock.annihilation(dim)))
    M = np.zeros((dim, dim))
    for rate, L in ops:
        W = rate * np.abs(L) ** 2        # jump rates m <- n
        M += W
        M -= np.diag(W.sum(axis=0))      # escape rates
    M[-1, :] = 1.0                       # trace normalization replaces one row
    b = np.zeros(dim)
    b[-1] = 1.0
    p = np.linalg.solve(M, b)
    return p


def steady_state(liouvillian: Liouvillian) -> np.ndarray:
    """Unique unit-trace stationary density matrix."""
    return solve_steady_built(liouvillian).rho


def solve_steady_built(liouvillian: Liouvillian) -> SteadyState:
    params, dim = liouvillian.params, liouvillian.dim
    _check_solvable(params)

    if params.undriven:
        p = _diagonal_steady(params, dim)
        rho = np.diag(p).astype(complex)
        herm_corr = 0.0
    else:
        A = liouvillian.matrix.tolil(copy=True)
        trace_idx = np.arange(dim) * (dim + 1)
        A[0, :] = 0.0
        A[0, trace_idx] = 1.0
        b = np.zeros(dim * dim, dtype=complex)
        b[0] = 1.0
        try:
            lu = spla.splu(A.tocsc())
            v = lu.solve(b)
        except RuntimeError:
            v = _svd_nullspace(liouvillian)
        rho = v.reshape(dim, dim, order="F")
        herm_corr = float(np.max(np.abs(rho - rho.conj().T)) / 2)
        rho = (rho + rho.conj().T) / 2

    rho = rho / np.trace(rho).real
    residual = _scaled_residual(liouvillian, rho)
    if residual > RESIDUAL_TOL:
        # Ill-conditioned direct solve; fall back to an explicit null space.
        v = _svd_nullspace(liouvillian)
        rho = v.reshape(dim, dim, order="F")
        rho = (rho + rho.conj().T) / 2
        rho = rho / np.trace(rho).real
        residual = _scaled_residual(liouvillian, rho)
    return SteadyState(rho=rho, residual=residual,
                       hermitize_correction=herm_corr, dim=dim)


def _scaled_residual(liouvillian: Liouvillian, rho: np.ndarray) -> float:
    r = np.max(np.abs(liouvillian.matrix @ rho.reshape(-1, order="F")))
    scale = max(1.0, abs(liouvillian.matrix).max())
    return float(r / scale)


def _svd_nullspace(liouvillian: Liouvillian) -> np.ndarray:
    dim = liouvillian.dim
    if dim > 80:
        raise DegenerateSteadyStateError(
            f"SVD fallback refused at dim={dim}; direct solve failed"
        )
    M = liouvillian.dense()
    _, s, vh = np.linalg.svd(M)
    scale = max(1.0, float(np.abs(M).max()))
    if s[-2] < 1e-10 * scale:
        raise DegenerateSteadyStateError(
            f"null space is not one-dimensional (sigma2={s[-2]:.2e})"
        )
    v = vh[-1].conj()
    # Fix the free phase so the trace is real positive.
    tr = v.reshape(dim, dim, order="F").trace()
    return v / tr


def solve_steady(params: SystemParams, dim: int | None = None,
                 cap: int = 400) -> SteadyState:
    """Steady state at a parameter point, choosing the truncation if needed."""
    if dim is None:
        dim = choose_dim(params, cap=cap)
    return solve_steady_built(build_liouvillian(params, dim))


def top_population(rho: np.ndarray, levels: int = 2) -> float:
    """Total population of the top `levels` Fock levels (truncation guard)."""
    return float(np.sum(rho.diagonal().real[-levels:]))


def _amplitude(rho: np.ndarray) -> float:
    n = np.arange(rho.shape[0])
    return float(np.sum(n * rho.diagonal().real))


def _subdiag_mag(rho: np.ndarray) -> float:
    return float(np.abs(np.sum(np.diagonal(rho, offset=-1))))


def _dim_guess(params: SystemParams) -> int:
    if params.gamma2 > 0:
        g1, g2, k = params.gamma1, params.gamma2, params.kappa
        n0 = g1 * (2 * g1 + g2 + k) / (g1 * (3 * g2 + k) + k * (g2 + k) + g1 ** 2)
        if g2 < g1:  # semi-classical: the ansatz value underestimates badly
            n0 = max(n0, (g1 + 2 * g2) / (2 * g2))
        drive = (params.Omega + params.eta) / max(g1, g2)
        n0 = n0 * (1 + drive) + drive
        return max(6, int(math.ceil(n0 + 6 * math.sqrt(n0) + 6)))
    return 6


def choose_dim(params: SystemParams, cap: int = 400, tol: float = 1e-8) -> int:
    """Smallest truncation (stepping by 4) whose observables are converged.

    Convergence: N and the subdiagonal coherence sum change by < tol when
    recomputed at dim+4, and the top two levels hold < tol population.
    """
    _check_solvable(params)
    dim = min(_dim_guess(params), cap)

    def observe(d):
        st = solve_steady_built(build_liouvillian(params, d)) if not params.undriven \
            else SteadyState(np.diag(_diagonal_steady(params, d)).astype(complex),
                             0.0, 0.0, d)
        return st, _amplitude(st.rho), _subdiag_mag(st.rho)

    st, N, S = observe(dim)
    while True:
        st4, N4, S4 = observe(dim + 4)
        if (abs(N4 - N) < tol and abs(S4 - S) < tol
                and top_population(st.rho) < tol):
            return dim
        dim += 4
        st, N, S = st4, N4, S4
        if dim > cap:
            raise DimensionCapError(
                f"truncation exceeded cap {cap} at {params}; "
                f"last N={N:.6g}, top population={top_population(st.rho):.2e}"
            )


def evolve(liouvillian: Liouvillian, rho0: np.ndarray, t: float) -> np.ndarray:
    """rho(t) = exp(L t)[rho0] by scaling-and-squaring matrix exponential."""
    if t < 0:
        raise ConfigError(f"evolution time must be >= 0, got {t}")
    if t == 0:
        return rho0.copy()
    dim = liouvillian.dim
    P = expm(liouvillian.dense() * t)
    if not np.all(np.isfinite(P)):
        raise StiffnessError(f"matrix exponential overflowed at t={t}")
    v = P @ rho0.reshape(-1, order="F")
    return v.reshape(dim, dim, order="F")
