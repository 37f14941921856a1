# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""
Immutable quantum states over ``n`` qubits.

Basis index ``i`` corresponds to the ket whose big-endian ``n``-bit string is the
binary expansion of ``i``: the first qubit is the most significant bit.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from .errors import (
    DimensionError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    NumericError,
)

ATOL = 1e-9


def qubits_for_dimension(dim: int) -> int:
    """
    Number of qubits of a Hilbert space of dimension ``dim``.

    Parameters
    ----------
    dim:
        The dimension, which must be a power of two.
    """
    if dim < 1 or dim & (dim - 1):
        raise DimensionError(f'Dimension {dim} is not a power of two.')
    return dim.bit_length() - 1


def _frozen_complex(values: ArrayLike) -> np.ndarray:
    out = np.array(values, dtype=np.complex128, copy=True)
    out.flags.writeable = False
    return out


def check_hermitian(matrix: np.ndarray, what: str = 'Matrix') -> None:
    deviation = np.max(np.abs(matrix - matrix.conj().T), initial=0.0)
    if deviation > ATOL:
        raise NotHermitianError(
            f'{what} is not Hermitian: largest deviation {deviation:.3e}.'
        )


def eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix in ascending order."""
    try:
        return np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as err:
        raise NumericError(f'Eigenvalue solver failed: {err}') from err


def check_positive(matrix: np.ndarray, what: str = 'Matrix') -> None:
    lowest = eigenvalues(matrix)[0]
    if lowest < -ATOL:
        raise NotPositiveError(f'{what} has a negative eigenvalue {lowest:.3e}.')


class PureState:
    """
    A unit-norm vector of complex amplitudes over ``2**n`` basis states.

    Parameters
    ----------
    amplitudes:
        The amplitudes, indexed by basis state.
    normalize:
        If ``True``, divide by the norm instead of requiring it to be one.
    """

    __slots__ = ('_amplitudes', '_qubit_count')

    def __init__(self, amplitudes: ArrayLike, *, normalize: bool = False) -> None:
        values = _frozen_complex(amplitudes)
        if values.ndim != 1:
            raise DimensionError(f'Amplitudes must be a vector, got {values.shape}.')
        self._qubit_count = qubits_for_dimension(values.size)
        norm = np.linalg.norm(values)
        if normalize:
            if norm == 0:
                raise NotNormalizedError('Cannot normalize the zero vector.')
            values = _frozen_complex(values / norm)
        elif abs(norm - 1.0) > ATOL:
            raise NotNormalizedError(f'State has norm {norm!r}, expected 1.')
        self._amplitudes = values

    @classmethod
    def basis(cls, n: int, index: int) -> PureState:
        """
        The pointer (computational basis) state ``|index>`` of ``n`` qubits.

        Parameters
        ----------
        n:
            Number of qubits.
        index:
            The basis index.
        """
        if not 0 <= index < 2**n:
            raise DimensionError(f'Basis index {index} is out of range for {n} qubits.')
        amplitudes = np.zeros(2**n, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(amplitudes)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def qubit_count(self) -> int:
        return self._qubit_count

    @property
    def dim(self) -> int:
        return self._amplitudes.size

    def __repr__(self) -> str:
        return f'PureState(qubit_count={self._qubit_count})'


class DensityMatrix:
    """
    A Hermitian, positive-semidefinite, trace-one matrix over ``2**n`` basis states.

    Parameters
    ----------
    entries:
        The square matrix.
    """

    __slots__ = ('_entries', '_qubit_count')

    def __init__(self, entries: ArrayLike) -> None:
        values = _frozen_complex(entries)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise DimensionError(
                f'A density matrix must be square, got shape {values.shape}.'
            )
        self._qubit_count = qubits_for_dimension(values.shape[0])
        check_hermitian(values, 'Density matrix')
        trace = np.trace(values).real
        if abs(trace - 1.0) > ATOL:
            raise NotNormalizedError(f'Density matrix has trace {trace!r}, expected 1.')
        check_positive(values, 'Density matrix')
        self._entries = values

    @classmethod
    def maximally_mixed(cls, n: int) -> DensityMatrix:
        """The identity divided by ``2**n``."""
        return cls(np.eye(2**n) / 2**n)

    @classmethod
    def diagonal(cls, weights: ArrayLike) -> DensityMatrix:
        """A density matrix with the given diagonal and no coherences."""
        return cls(np.diag(np.asarray(weights, dtype=np.complex128)))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def qubit_count(self) -> int:
        return self._qubit_count

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def __repr__(self) -> str:
        return f'DensityMatrix(qubit_count={self._qubit_count})'


class JointState:
    """
    A pure state of a system and its environment, ordered system-first.

    Parameters
    ----------
    amplitudes:
        Amplitudes over the product basis, of length ``system_dim * env_dim``.
    system_dim:
        Dimension of the system factor.
    env_dim:
        Dimension of the environment factor.
    """

    __slots__ = ('_amplitudes', '_env_dim', '_system_dim')

    def __init__(self, amplitudes: ArrayLike, system_dim: int, env_dim: int) -> None:
        values = _frozen_complex(amplitudes)
        if values.ndim != 1 or system_dim < 1 or env_dim < 1:
            raise DimensionError('Joint amplitudes must be a vector.')
        if values.size != system_dim * env_dim:
            raise DimensionError(
                f'Joint state has {values.size} amplitudes but the dimensions '
                f'{system_dim} x {env_dim} require {system_dim * env_dim}.'
            )
        norm = np.linalg.norm(values)
        if abs(norm - 1.0) > ATOL:
            raise NotNormalizedError(f'Joint state has norm {norm!r}, expected 1.')
        self._amplitudes = values
        self._system_dim = system_dim
        self._env_dim = env_dim

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def system_dim(self) -> int:
        return self._system_dim

    @property
    def env_dim(self) -> int:
        return self._env_dim

    def __repr__(self) -> str:
        return f'JointState(system_dim={self._system_dim}, env_dim={self._env_dim})'


__all__ = [
    'ATOL',
    'DensityMatrix',
    'JointState',
    'PureState',
    'check_hermitian',
    'check_positive',
    'eigenvalues',
    'qubits_for_dimension',
]
