"""Ladder-operator algebra on the truncated Fock space."""
import numpy as np
import pytest

from qvdp import fock
from qvdp.errors import ConfigError, DimensionMismatchError


def test_annihilation_matrix_elements():
    a = fock.annihilation(5)
    for n in range(1, 5):
        assert a[n - 1, n] == pytest.approx(np.sqrt(n))
    # everything else is zero
    mask = np.ones((5, 5), dtype=bool)
    mask[np.arange(4), np.arange(1, 5)] = False
    assert np.all(a[mask] == 0)


def test_commutator_truncation():
    # [a, a^dag] = 1 except in the top-left... actually top corner element
    dim = 8
    a = fock.annihilation(dim)
    ad = fock.creation(dim)
    comm = a @ ad - ad @ a
    expect = np.eye(dim)
    expect[-1, -1] = -(dim - 1)     # truncation artifact, exact value
    assert np.allclose(comm, expect)


def test_number_operator():
    dim = 6
    n_op = fock.number(dim)
    assert np.allclose(n_op, fock.creation(dim) @ fock.annihilation(dim))
    assert np.allclose(np.diag(n_op).real, np.arange(dim))


def test_identity():
    assert np.array_equal(fock.identity(4), np.eye(4, dtype=complex))


def test_dim_validation():
    with pytest.raises(ConfigError):
        fock.annihilation(2)
    with pytest.raises(ConfigError):
        fock.number(-1)
    with pytest.raises(ConfigError):
        fock.check_dim(3.5)
    with pytest.raises(ConfigError):
        fock.check_dim(True)
    assert fock.check_dim(np.int64(7)) == 7


def test_compose():
    a = fock.annihilation(4)
    ad = fock.creation(4)
    out = fock.compose([a, ad], [2.0, 1j])
    assert np.allclose(out, 2.0 * a + 1j * ad)


def test_compose_mismatch():
    with pytest.raises(DimensionMismatchError):
        fock.compose([fock.annihilation(4), fock.annihilation(5)], [1, 1])
    with pytest.raises(DimensionMismatchError):
        fock.compose([fock.annihilation(4)], [1, 2])
    with pytest.raises(DimensionMismatchError):
        fock.compose([], [])


def test_hamiltonian_hermitian_and_elements():
    dim = 7
    H = fock.hamiltonian(delta=0.7, Omega=0.3, eta=0.2, dim=dim)
    assert np.allclose(H, H.conj().T)
    # diagonal: delta * n
    assert np.allclose(np.diag(H).real, 0.7 * np.arange(dim))
    # first off-diagonal: Omega sqrt(n)
    assert H[0, 1] == pytest.approx(0.3 * 1.0)
    assert H[1, 2] == pytest.approx(0.3 * np.sqrt(2))
    # second off-diagonal: eta sqrt(n(n-1)) terms of a^2 + a^dag^2
    assert H[0, 2] == pytest.approx(0.2 * np.sqrt(2))
    assert H[2, 4] == pytest.approx(0.2 * np.sqrt(12))
