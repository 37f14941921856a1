# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import logging
from collections.abc import Callable

import numpy as np
from scipy import stats

from ..core.errors import BoundViolationError, ConfigError, DimensionError
from ..core.states import ATOL, DensityMatrix, PureState
from ..measurement.measure import collapse, measure_pure
from ..measurement.povm import block_pvm
from .laws import MixtureSpec
from .rng import SeededRng

logger = logging.getLogger(__name__)

WeightFunction = Callable[[PureState], float]


def haar_pure(n: int, rng: SeededRng) -> PureState:
    """
    A pure state drawn from the unitarily invariant (Haar) distribution.

    The amplitudes are ``2^n`` independent standard complex Gaussians, normalized.

    Parameters
    ----------
    n:
        Number of qubits, at least one.
    rng:
        The random stream.
    """
    if n < 1:
        raise DimensionError(f'Need at least one qubit, got n={n}.')
    d = 2**n
    gen = rng.generator
    amplitudes = gen.standard_normal(d) + 1j * gen.standard_normal(d)
    return PureState(amplitudes, normalize=True)


def mixed_state(n: int, spec: MixtureSpec, rng: SeededRng) -> DensityMatrix:
    """
    The mixture ``sum_i p_i |psi_i><psi_i|`` of ``M`` Haar states with weights drawn
    from the simplex law of ``spec``.

    Parameters
    ----------
    n:
        Number of qubits.
    spec:
        Component count and simplex law.
    rng:
        The random stream.
    """
    weights = spec.draw_weights(rng.generator)
    components = np.stack(
        [haar_pure(n, rng).amplitudes for _ in range(spec.component_count)]
    )
    entries = np.einsum('m,mi,mj->ij', weights, components, components.conj())
    return DensityMatrix(entries)


def collapsed_sample(n: int, c: int, rng: SeededRng) -> tuple[PureState, int]:
    """
    A Haar state measured with ``block_pvm(n, c)`` and collapsed onto the sampled
    outcome.

    Parameters
    ----------
    n:
        Number of qubits.
    c:
        Coarseness; each block spans ``2^c`` basis states.
    rng:
        The random stream.

    Returns
    -------
    :
        The collapsed state and the outcome index.
    """
    pvm = block_pvm(n, c)
    psi = haar_pure(n, rng)
    p = measure_pure(psi, pvm)
    k = int(rng.generator.choice(p.size, p=p.weights))
    return collapse(psi, pvm, k), k


def rejection_sample(
    n: int,
    c_bias: float,
    weight_fn: WeightFunction,
    rng: SeededRng,
    *,
    max_attempts: int = 1_000_000,
) -> tuple[PureState, int]:
    """
    Rejection sampling from the Haar distribution with acceptance probability
    ``weight_fn(psi) / 2^c_bias``.

    Returns the accepted state together with the number of proposals it took.

    Parameters
    ----------
    n:
        Number of qubits.
    c_bias:
        Log2 of the bound on ``weight_fn``.
    weight_fn:
        Weight of a proposed state, in ``[0, 2^c_bias]``.
    rng:
        The random stream.
    max_attempts:
        Give up after this many rejected proposals.
    """
    if c_bias < 0:
        raise ConfigError(f'Bias bound must be nonnegative, got c_bias={c_bias}.')
    bound = 2.0**c_bias
    gen = rng.generator
    for attempt in range(1, max_attempts + 1):
        psi = haar_pure(n, rng)
        weight = float(weight_fn(psi))
        if weight < -ATOL or weight > bound + ATOL:
            raise BoundViolationError(
                f'Weight {weight!r} is outside [0, 2^{c_bias}] = [0, {bound!r}].'
            )
        if gen.random() * bound < weight:
            return psi, attempt
    raise BoundViolationError(
        f'No state accepted after {max_attempts} proposals; '
        'the weight function is (almost) zero.'
    )


def biased_prior_sample(
    n: int,
    c_bias: float,
    weight_fn: WeightFunction,
    rng: SeededRng,
    *,
    max_attempts: int = 1_000_000,
) -> PureState:
    """
    A state from the biased prior ``Gamma`` with density ``weight_fn / 2^c_bias``
    relative to Haar, hence ``Gamma <= 2^c_bias * Haar``.

    Parameters
    ----------
    n:
        Number of qubits.
    c_bias:
        Log2 of the bound on ``weight_fn``.
    weight_fn:
        Weight of a state, in ``[0, 2^c_bias]``.
    rng:
        The random stream.
    max_attempts:
        Give up after this many rejected proposals.
    """
    psi, _ = rejection_sample(n, c_bias, weight_fn, rng, max_attempts=max_attempts)
    return psi


def quantile_weight(n: int, c_bias: float, q: float) -> WeightFunction:
    """
    The weight ``2^c_bias * 1[|<0|psi>|^2 > t_q]`` where ``t_q`` is the ``q``-quantile
    of ``|<0|psi>|^2`` under Haar, which follows ``Beta(1, 2^n - 1)``.

    The accepted fraction of Haar proposals is ``1 - q``.

    Parameters
    ----------
    n:
        Number of qubits.
    c_bias:
        Log2 of the weight on favoured states.
    q:
        Quantile in ``[0, 1)``.
    """
    if not 0 <= q < 1:
        raise ConfigError(f'Quantile must lie in [0, 1), got {q}.')
    threshold = float(stats.beta(1, 2**n - 1).ppf(q))
    height = 2.0**c_bias
    logger.debug('Quantile weight for n=%d, q=%s: threshold %.6g', n, q, threshold)

    def weight(psi: PureState) -> float:
        return height if abs(psi.amplitudes[0]) ** 2 > threshold else 0.0

    return weight
