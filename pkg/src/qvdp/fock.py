"""Truncated Fock-space ladder operators and elementary matrix algebra.

All operators are dense complex matrices on the basis |0>..|dim-1>.
They are built once and never mutated, so they are safe to share across
parallel workers.
"""
from __future__ import annotations

import numpy as np

from .errors import ConfigError, DimensionMismatchError

#: Minimum retained Fock levels.  The two-level-plus-|2> structure of the
#: deep-quantum steady state and the squeeze drive both need |2>.
MIN_DIM = 3


def check_dim(dim: int) -> int:
    """Validate a Fock truncation dimension and return it as a plain int."""
    if not isinstance(dim, (int, np.integer)) or isinstance(dim, bool):
        raise ConfigError(f"Fock dimension must be an integer, got {dim!r}")
    if dim < MIN_DIM:
        raise ConfigError(f"Fock dimension must be >= {MIN_DIM}, got {dim}")
    return int(dim)


def annihilation(dim: int) -> np.ndarray:
    """Ladder operator a with a[n, n+1] = sqrt(n+1)."""
    dim = check_dim(dim)
    a = np.zeros((dim, dim), dtype=complex)
    n = np.arange(1, dim)
    a[n - 1, n] = np.sqrt(n)
    return a


def creation(dim: int) -> np.ndarray:
    """Ladder operator a^dag (conjugate transpose of `annihilation`)."""
    return annihilation(dim).conj().T


def number(dim: int) -> np.ndarray:
    """Number operator a^dag a = diag(0, 1, ..., dim-1)."""
    dim = check_dim(dim)
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def identity(dim: int) -> np.ndarray:
    dim = check_dim(dim)
    return np.eye(dim, dtype=complex)


def compose(ops: list[np.ndarray], scalars: list[complex]) -> np.ndarray:
    """Linear combination sum_i scalars[i] * ops[i].

    All operands must share the same dimension.
    """
    if len(ops) != len(scalars):
        raise DimensionMismatchError(
            f"{len(ops)} operators but {len(scalars)} scalars"
        )
    if not ops:
        raise DimensionMismatchError("empty operator list")
    shape = ops[0].shape
    for op in ops[1:]:
        if op.shape != shape:
            raise DimensionMismatchError(
                f"operator shapes differ: {op.shape} vs {shape}"
            )
    out = np.zeros(shape, dtype=complex)
    for c, op in zip(scalars, ops):
        out += c * op
    return out


def hamiltonian(delta: float, Omega: float, eta: float, dim: int) -> np.ndarray:
    """Rotating-frame Hamiltonian delta*a^dag a + Omega*(a + a^dag) + eta*(a^2 + a^dag^2)."""
    a = annihilation(dim)
    ad = a.conj().T
    H = delta * (ad @ a) + Omega * (a + ad) + eta * (a @ a + ad @ ad)
    return H
