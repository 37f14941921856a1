# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np

from ..classical.probability import FiniteProbability
from ..core.errors import ConfigError
from ..core.states import DensityMatrix, JointState, PureState


def plus_state(n: int = 1) -> PureState:
    """
    The uniform superposition ``|+>^n`` of all ``2^n`` pointer states.

    Parameters
    ----------
    n:
        Number of qubits.
    """
    return PureState(np.full(2**n, 2.0 ** (-n / 2)))


def basis_state(n: int = 1, index: int = 0) -> PureState:
    return PureState.basis(n, index)


def ghz_state(n: int = 2) -> PureState:
    """``(|0...0> + |1...1>) / sqrt(2)``."""
    amplitudes = np.zeros(2**n)
    amplitudes[[0, -1]] = np.sqrt(0.5)
    return PureState(amplitudes)


def bell_pair() -> JointState:
    """``(|00> + |11>) / sqrt(2)`` split into a one-qubit system and environment."""
    return JointState(ghz_state(2).amplitudes, 2, 2)


def maximally_mixed(n: int = 1) -> DensityMatrix:
    return DensityMatrix.maximally_mixed(n)


def sparse_probability(
    size: int, rng: np.random.Generator, max_support: int = 8
) -> FiniteProbability:
    """
    A random probability with a small support: between two and ``max_support``
    distinct outcomes with Dirichlet weights.

    Parameters
    ----------
    size:
        Number of outcomes.
    rng:
        The random generator.
    max_support:
        Largest support size.
    """
    count = int(rng.integers(2, min(max_support, size) + 1))
    support = rng.choice(size, size=count, replace=False)
    weights = np.zeros(size)
    weights[support] = rng.dirichlet(np.ones(count))
    return FiniteProbability.from_unnormalized(weights)


def named_state(spec: str, n: int) -> PureState:
    """
    A state from its name: ``plus``, ``ghz``, or ``basis:<index>``.

    Parameters
    ----------
    spec:
        The state name.
    n:
        Number of qubits.
    """
    name, _, arg = spec.partition(':')
    if name == 'plus':
        return plus_state(n)
    if name == 'ghz':
        return ghz_state(n)
    if name == 'basis':
        try:
            index = int(arg or 0)
        except ValueError:
            raise ConfigError(f"Basis index in '{spec}' is not an integer.") from None
        return basis_state(n, index)
    raise ConfigError(f"Unknown state '{spec}'. Use 'plus', 'ghz' or 'basis:<index>'.")
