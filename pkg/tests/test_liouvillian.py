"""Lindblad generator construction and steady-state solving."""
import math

import numpy as np
import pytest

from qvdp import fock, observables
from qvdp.errors import (
    ConfigError,
    DimensionCapError,
    PureGainError,
    StiffnessError,
)
from qvdp.liouvillian import (
    Liouvillian,
    SystemParams,
    build_liouvillian,
    choose_dim,
    evolve,
    solve_steady,
    solve_steady_built,
    steady_state,
    top_population,
)


def lindblad_rhs(params: SystemParams, rho: np.ndarray) -> np.ndarray:
    """Textbook right-hand side, written directly in matrix form (oracle)."""
    dim = rho.shape[0]
    a = fock.annihilation(dim)
    ad = a.conj().T
    H = fock.hamiltonian(params.delta, params.Omega, params.eta, dim)
    out = -1j * (H @ rho - rho @ H)
    for rate, L in ((params.gamma1, ad), (params.gamma2, a @ a), (params.kappa, a)):
        if rate == 0:
            continue
        Ld = L.conj().T
        out += rate * (L @ rho @ Ld - 0.5 * (Ld @ L @ rho + rho @ Ld @ L))
    return out


class TestParams:
    def test_defaults(self):
        p = SystemParams()
        assert p.gamma1 == 1.0 and p.undriven

    def test_validation(self):
        with pytest.raises(ConfigError):
            SystemParams(gamma1=0.0)
        with pytest.raises(ConfigError):
            SystemParams(gamma2=-1.0)
        with pytest.raises(ConfigError):
            SystemParams(Omega=-0.1)
        with pytest.raises(ConfigError):
            SystemParams(delta=math.inf)

    def test_replace(self):
        p = SystemParams(gamma2=5.0).replace(Omega=0.3)
        assert p.gamma2 == 5.0 and p.Omega == 0.3
        assert not p.undriven


class TestGenerator:
    @pytest.mark.parametrize("params", [
        SystemParams(gamma2=3.0),
        SystemParams(gamma2=10.0, kappa=0.5, delta=1.2, Omega=0.4, eta=0.2),
    ])
    def test_apply_matches_direct_rhs(self, params):
        dim = 8
        liou = build_liouvillian(params, dim)
        rng = np.random.default_rng(3)
        A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        rho = A @ A.conj().T
        rho /= np.trace(rho).real
        assert np.allclose(liou.apply(rho), lindblad_rhs(params, rho), atol=1e-12)

    def test_trace_preservation(self):
        liou = build_liouvillian(SystemParams(gamma2=2.0, Omega=0.5), 10)
        rng = np.random.default_rng(4)
        A = rng.normal(size=(10, 10)) + 1j * rng.normal(size=(10, 10))
        rho = A @ A.conj().T
        assert abs(np.trace(liou.apply(rho))) < 1e-10 * np.abs(rho).max()

    def test_dense_refuses_large(self):
        liou = Liouvillian(SystemParams(gamma2=1.0), 81, build_liouvillian(
            SystemParams(gamma2=1.0), 4).matrix)
        with pytest.raises(StiffnessError):
            liou.dense()


class TestSteadyState:
    def test_undriven_deep_quantum_populations(self):
        st = solve_steady(SystemParams(gamma2=1e4))
        p = st.populations
        assert p[0] == pytest.approx(2 / 3, abs=1e-3)
        assert p[1] == pytest.approx(1 / 3, abs=1e-3)
        assert st.residual < 1e-10

    def test_diagonal_path_equals_full_solve(self):
        # undriven solves use the decoupled population sector; confirm it
        # matches a full superoperator solve of the same generator
        params = SystemParams(gamma2=7.0, kappa=0.8)
        dim = 12
        st = solve_steady(params, dim=dim)
        liou = build_liouvillian(params, dim)
        A = liou.matrix.toarray()
        tr = np.zeros(dim * dim, dtype=complex)
        tr[np.arange(dim) * (dim + 1)] = 1.0
        A[0] = tr
        b = np.zeros(dim * dim, dtype=complex)
        b[0] = 1.0
        rho = np.linalg.solve(A, b).reshape(dim, dim, order="F")
        assert np.allclose(st.rho, (rho + rho.conj().T) / 2, atol=1e-12)

    def test_driven_state_is_physical(self):
        params = SystemParams(gamma2=20.0, kappa=0.3, delta=0.5, Omega=0.4, eta=0.1)
        st = solve_steady(params)
        rho = st.rho
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        assert np.allclose(rho, rho.conj().T)
        evals = np.linalg.eigvalsh(rho)
        assert evals.min() > -1e-12
        assert st.residual < 1e-10

    def test_stationarity(self):
        params = SystemParams(gamma2=50.0, delta=1.0, Omega=0.5)
        dim = choose_dim(params)
        liou = build_liouvillian(params, dim)
        rho = steady_state(liou)
        assert np.max(np.abs(liou.apply(rho))) < 1e-9

    def test_pure_gain_rejected(self):
        with pytest.raises(PureGainError):
            solve_steady(SystemParams(gamma2=0.0, kappa=0.5))

    def test_linear_gain_loss_is_geometric(self):
        # gamma2 = 0, kappa > gamma1: detailed balance gives p_{n+1}/p_n = g1/k
        st = solve_steady(SystemParams(gamma1=1.0, gamma2=0.0, kappa=4.0))
        p = st.populations
        assert p[0] == pytest.approx(3 / 4, abs=1e-6)
        assert p[1] / p[0] == pytest.approx(1 / 4, abs=1e-6)

    def test_dim_override(self):
        st = solve_steady(SystemParams(gamma2=1e3), dim=5)
        assert st.dim == 5


class TestChooseDim:
    def test_deep_quantum_is_small(self):
        assert choose_dim(SystemParams(gamma2=1e3)) <= 14

    def test_semiclassical_grows(self):
        d_small = choose_dim(SystemParams(gamma2=100.0))
        d_large = choose_dim(SystemParams(gamma2=0.1))
        assert d_large > d_small

    def test_convergence_of_observables(self):
        params = SystemParams(gamma2=1.0, Omega=0.5, delta=0.3)
        dim = choose_dim(params)
        N1 = observables.amplitude(solve_steady(params, dim=dim).rho)
        N2 = observables.amplitude(solve_steady(params, dim=dim + 8).rho)
        assert abs(N1 - N2) < 1e-7

    def test_cap(self):
        with pytest.raises(DimensionCapError):
            choose_dim(SystemParams(gamma2=1e-2), cap=20)

    def test_top_population_guard(self):
        st = solve_steady(SystemParams(gamma2=10.0))
        assert top_population(st.rho) < 1e-8


class TestEvolve:
    def test_converges_to_steady_state(self):
        params = SystemParams(gamma2=30.0, Omega=0.4, delta=0.8)
        dim = choose_dim(params)
        liou = build_liouvillian(params, dim)
        target = steady_state(liou)
        rho0 = np.zeros((dim, dim), dtype=complex)
        rho0[0, 0] = 1.0
        rho_t = evolve(liou, rho0, 50.0)
        assert np.max(np.abs(rho_t - target)) < 1e-8

    def test_zero_time_is_identity(self):
        liou = build_liouvillian(SystemParams(gamma2=5.0), 6)
        rho0 = np.eye(6, dtype=complex) / 6
        assert np.array_equal(evolve(liou, rho0, 0.0), rho0)

    def test_negative_time_rejected(self):
        liou = build_liouvillian(SystemParams(gamma2=5.0), 6)
        with pytest.raises(ConfigError):
            evolve(liou, np.eye(6, dtype=complex) / 6, -1.0)
