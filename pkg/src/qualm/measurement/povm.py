# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

import json
from collections.abc import Sequence
from functools import cached_property
from os import PathLike

import numpy as np
from numpy.typing import ArrayLike

from ..core.errors import (
    DimensionError,
    IncompleteMeasurementError,
    NotProjectiveError,
)
from ..core.io import decode_complex, encode_complex
from ..core.states import ATOL, check_hermitian, check_positive, qubits_for_dimension


class PovmSet:
    """
    A validated collection of measurement elements ``E_k`` summing to the identity.

    Instances are created by :func:`validate_povm` or :func:`block_pvm`.

    Parameters
    ----------
    elements:
        Array of shape ``(outcomes, d, d)``.
    """

    def __init__(self, elements: np.ndarray) -> None:
        self._elements = np.array(elements, dtype=np.complex128, copy=True)
        self._elements.flags.writeable = False

    @property
    def elements(self) -> np.ndarray:
        """Read-only array of shape ``(outcomes, d, d)``."""
        return self._elements

    @property
    def outcome_count(self) -> int:
        return self._elements.shape[0]

    @property
    def dim(self) -> int:
        return self._elements.shape[1]

    @property
    def qubit_count(self) -> int:
        return qubits_for_dimension(self.dim)

    @property
    def is_pvm(self) -> bool:
        return False

    def traces(self, rho: np.ndarray) -> np.ndarray:
        """``Tr(E_k rho)`` for every outcome, before discarding imaginary parts."""
        return np.einsum('kij,ji->k', self.elements, rho)

    def pure_traces(self, amplitudes: np.ndarray) -> np.ndarray:
        """``<psi|E_k|psi>`` for every outcome."""
        return np.einsum('i,kij,j->k', amplitudes.conj(), self.elements, amplitudes)

    def __repr__(self) -> str:
        return f'{type(self).__name__}(outcomes={self.outcome_count}, dim={self.dim})'


class PvmSet(PovmSet):
    """A POVM whose elements are mutually orthogonal projectors."""

    @property
    def is_pvm(self) -> bool:
        return True

    def project(self, k: int, amplitudes: np.ndarray) -> np.ndarray:
        """``F_k |psi>``, not normalized."""
        return self.elements[k] @ amplitudes


class BlockPvm(PvmSet):
    """
    Projectors onto contiguous ranges of ``2**c`` basis indices of ``n`` qubits.

    Projector ``j`` spans the basis indices ``[j 2**c, (j+1) 2**c)``. The dense
    elements are only built when :attr:`elements` is accessed.

    Parameters
    ----------
    n:
        Number of qubits.
    c:
        Coarseness; each projector has rank ``2**c``.
    """

    def __init__(self, n: int, c: int) -> None:
        self._n = n
        self._c = c

    @property
    def n(self) -> int:
        return self._n

    @property
    def c(self) -> int:
        return self._c

    @property
    def outcome_count(self) -> int:
        return 2 ** (self._n - self._c)

    @property
    def dim(self) -> int:
        return 2**self._n

    @cached_property
    def elements(self) -> np.ndarray:
        width = 2**self._c
        out = np.zeros((self.outcome_count, self.dim, self.dim), dtype=np.complex128)
        for j in range(self.outcome_count):
            idx = np.arange(j * width, (j + 1) * width)
            out[j, idx, idx] = 1.0
        out.flags.writeable = False
        return out

    def _block_sums(self, diagonal: np.ndarray) -> np.ndarray:
        return diagonal.reshape(self.outcome_count, 2**self._c).sum(axis=1)

    def traces(self, rho: np.ndarray) -> np.ndarray:
        return self._block_sums(np.diagonal(rho)).astype(np.complex128)

    def pure_traces(self, amplitudes: np.ndarray) -> np.ndarray:
        return self._block_sums(np.abs(amplitudes) ** 2).astype(np.complex128)

    def project(self, k: int, amplitudes: np.ndarray) -> np.ndarray:
        width = 2**self._c
        out = np.zeros_like(amplitudes)
        out[k * width : (k + 1) * width] = amplitudes[k * width : (k + 1) * width]
        return out

    def block_of(self, index: int) -> int:
        """The outcome whose projector contains basis index ``index``."""
        return index >> self._c

    def __repr__(self) -> str:
        return f'BlockPvm(n={self._n}, c={self._c})'


def _as_stack(elements: Sequence[ArrayLike]) -> np.ndarray:
    if len(elements) == 0:
        raise DimensionError('A measurement needs at least one element.')
    mats = [np.asarray(e, dtype=np.complex128) for e in elements]
    shapes = {m.shape for m in mats}
    if len(shapes) != 1:
        raise DimensionError(f'Elements have different shapes {sorted(shapes)}.')
    shape = shapes.pop()
    if len(shape) != 2 or shape[0] != shape[1]:
        raise DimensionError(f'Elements must be square matrices, got shape {shape}.')
    qubits_for_dimension(shape[0])
    return np.stack(mats)


def _is_projective(stack: np.ndarray) -> bool:
    for j, ej in enumerate(stack):
        if np.max(np.abs(ej @ ej - ej)) > ATOL:
            return False
        for ek in stack[j + 1 :]:
            if np.max(np.abs(ej @ ek)) > ATOL:
                return False
    return True


def validate_povm(elements: Sequence[ArrayLike]) -> PovmSet:
    """
    Check measurement elements and return them as a :class:`PovmSet`.

    A :class:`PvmSet` is returned when the elements are also mutually orthogonal
    projectors.

    Parameters
    ----------
    elements:
        Square matrices of equal dimension.

    Raises
    ------
    NotHermitianError
        If an element is not Hermitian.
    NotPositiveError
        If an element has a negative eigenvalue.
    IncompleteMeasurementError
        If the elements do not sum to the identity.
    """
    stack = _as_stack(elements)
    for k, element in enumerate(stack):
        check_hermitian(element, f'Measurement element {k}')
        check_positive(element, f'Measurement element {k}')
    deviation = np.max(np.abs(stack.sum(axis=0) - np.eye(stack.shape[1])))
    if deviation > ATOL:
        raise IncompleteMeasurementError(
            f'Measurement elements do not sum to the identity: largest deviation '
            f'{deviation:.3e}.'
        )
    return PvmSet(stack) if _is_projective(stack) else PovmSet(stack)


def validate_pvm(elements: Sequence[ArrayLike]) -> PvmSet:
    """
    Like :func:`validate_povm`, but also require orthogonal projectors.

    Raises
    ------
    NotProjectiveError
        If the elements are a valid POVM but not a PVM.
    """
    povm = validate_povm(elements)
    if not isinstance(povm, PvmSet):
        raise NotProjectiveError(
            'Measurement elements are not mutually orthogonal projectors.'
        )
    return povm


def block_pvm(n: int, c: int) -> BlockPvm:
    """
    The PVM of ``2**(n-c)`` projectors onto contiguous blocks of basis states.

    Parameters
    ----------
    n:
        Number of qubits.
    c:
        Coarseness, ``0 <= c <= n``. ``c = 0`` is the computational basis and
        ``c = n`` the single identity projector.
    """
    if n < 0 or not 0 <= c <= n:
        raise DimensionError(f'Coarseness c={c} must lie in [0, {n}].')
    return BlockPvm(n, c)


def computational_pvm(n: int) -> BlockPvm:
    """Rank-one projectors onto the pointer basis of ``n`` qubits."""
    return block_pvm(n, 0)


def save_povm(povm: PovmSet, path: str | PathLike) -> None:
    """Write the elements as a JSON list of matrices of ``[re, im]`` pairs."""
    with open(path, 'w') as f:
        json.dump([encode_complex(e) for e in povm.elements], f)


def load_povm(path: str | PathLike) -> PovmSet:
    """Read and validate a POVM written by :func:`save_povm`."""
    with open(path) as f:
        data = json.load(f)
    return validate_povm([decode_complex(e) for e in data])
