# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np

from ..classical.probability import FiniteProbability
from .errors import DimensionError
from .states import DensityMatrix, JointState, PureState, eigenvalues


def outer_product(s: PureState) -> DensityMatrix:
    """The rank-one density matrix ``|psi><psi|`` of a pure state."""
    return DensityMatrix(np.outer(s.amplitudes, s.amplitudes.conj()))


def partial_trace_env(j: JointState) -> DensityMatrix:
    """
    Reduced density matrix of the system, with the environment traced out.

    Parameters
    ----------
    j:
        The joint system-environment state.
    """
    block = j.amplitudes.reshape(j.system_dim, j.env_dim)
    return DensityMatrix(block @ block.conj().T)


def purity(rho: DensityMatrix) -> float:
    """``Tr rho^2``, between ``2**-n`` and one."""
    return float(np.vdot(rho.entries, rho.entries).real)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """
    Von Neumann entropy ``-sum_i l_i log2 l_i`` in bits.

    Eigenvalues are clipped to ``[0, 1]`` first and ``0 log 0`` is taken as zero.

    Parameters
    ----------
    rho:
        The density matrix.
    """
    spectrum = np.clip(eigenvalues(rho.entries), 0.0, 1.0)
    spectrum = spectrum[spectrum > 0.0]
    return max(0.0, float(-np.sum(spectrum * np.log2(spectrum))))


def diagonal_probability(s: PureState) -> FiniteProbability:
    """The classical probability ``p(i) = |<i|psi>|^2`` on the pointer basis."""
    return FiniteProbability.from_unnormalized(np.abs(s.amplitudes) ** 2)


def product_state(system: PureState, env: np.ndarray) -> JointState:
    """
    The uncorrelated joint state ``|system> (x) |env>``.

    Parameters
    ----------
    system:
        The system state.
    env:
        Unit-norm environment amplitudes.
    """
    env = np.asarray(env, dtype=np.complex128)
    return JointState(np.kron(system.amplitudes, env), system.dim, env.size)


def entangled_pair(
    psi1: PureState, psi2: PureState, e1: np.ndarray, e2: np.ndarray
) -> JointState:
    """
    The normalized joint state ``|psi1>|e1> + |psi2>|e2>``.

    This is what the superposition of ``psi1`` and ``psi2`` becomes once the
    environment has recorded which branch the system is in.

    Parameters
    ----------
    psi1, psi2:
        System branches.
    e1, e2:
        Unit-norm environment records of each branch, of equal length.
    """
    if psi1.dim != psi2.dim:
        raise DimensionError('Both branches must live in the same system space.')
    e1 = np.asarray(e1, dtype=np.complex128)
    e2 = np.asarray(e2, dtype=np.complex128)
    if e1.shape != e2.shape or e1.ndim != 1:
        raise DimensionError('Environment records must be vectors of equal length.')
    joint = np.kron(psi1.amplitudes, e1) + np.kron(psi2.amplitudes, e2)
    return JointState(joint / np.linalg.norm(joint), psi1.dim, e1.size)


def environment_records(overlap: complex) -> tuple[np.ndarray, np.ndarray]:
    """
    Two unit environment kets ``|E1>, |E2>`` of a qubit with ``<E1|E2> = overlap``.

    Parameters
    ----------
    overlap:
        The inner product, of modulus at most one.
    """
    if abs(overlap) > 1.0 + 1e-12:
        raise DimensionError(f'Overlap {overlap} exceeds one in modulus.')
    e1 = np.array([1.0, 0.0], dtype=np.complex128)
    e2 = np.array([overlap, np.sqrt(max(0.0, 1.0 - abs(overlap) ** 2))])
    return e1, e2.astype(np.complex128)


def interference_density(
    psi1: PureState, psi2: PureState, overlap: complex
) -> DensityMatrix:
    """
    Reduced density of ``(|psi1>|E1> + |psi2>|E2>)/N`` given ``<E1|E2> = overlap``.

    The coherence terms are ``|psi1><psi2| <E2|E1>`` and its Hermitian conjugate
    ``|psi2><psi1| <E1|E2>``.

    Parameters
    ----------
    psi1, psi2:
        System branches.
    overlap:
        The environment overlap ``<E1|E2>``.
    """
    a = psi1.amplitudes
    b = psi2.amplitudes
    rho = (
        np.outer(a, a.conj())
        + np.outer(b, b.conj())
        + np.outer(a, b.conj()) * np.conj(overlap)
        + np.outer(b, a.conj()) * overlap
    )
    return DensityMatrix(rho / np.trace(rho).real)


__all__ = [
    'diagonal_probability',
    'entangled_pair',
    'environment_records',
    'interference_density',
    'outer_product',
    'partial_trace_env',
    'product_state',
    'purity',
    'von_neumann_entropy',
]
