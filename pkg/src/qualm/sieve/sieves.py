# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import logging
from math import fsum

from ..core.errors import DimensionError
from ..core.operations import outer_product, purity, von_neumann_entropy
from ..core.states import PureState
from ..estimators.encoding import OutcomeEncoding, side_string
from ..estimators.information import self_info_hat
from ..estimators.models import ComplexityModel
from .decoherence import DecoherenceParams, decohere, limit_decohere

logger = logging.getLogger(__name__)

MAX_POINTER_QUBITS = 12


def sieve_purity(
    s: PureState, t: float, params: DecoherenceParams | None = None
) -> float:
    """Purity of ``s`` after decohering for time ``t``; starts at one and decreases."""
    return purity(decohere(outer_product(s), t, params))


def sieve_entropy(
    s: PureState, t: float, params: DecoherenceParams | None = None
) -> float:
    """Entropy of ``s`` after decohering for time ``t``; starts at zero and grows."""
    return von_neumann_entropy(decohere(outer_product(s), t, params))


def sieve_algorithmic(s: PureState, model: ComplexityModel) -> float:
    """
    Algorithmic predictability of ``s``: the estimated self-information of the
    pointer-basis probability it decoheres to, with outcomes written as
    ``n``-bit strings and ``n`` given as side information.

    Parameters
    ----------
    s:
        The state.
    model:
        The complexity model.
    """
    n = s.qubit_count
    return self_info_hat(
        model, limit_decohere(s), OutcomeEncoding.for_qubits(n), side_string(n)
    )


def pointer_average(n: int, model: ComplexityModel) -> float:
    """
    Average algorithmic predictability over all ``2^n`` pointer states.

    Parameters
    ----------
    n:
        Number of qubits, at most 12.
    model:
        The complexity model.
    """
    if not 1 <= n <= MAX_POINTER_QUBITS:
        raise DimensionError(
            f'Pointer averages are computed for 1 <= n <= {MAX_POINTER_QUBITS}, '
            f'got n={n}.'
        )
    logger.debug('Averaging over %d pointer states with %r', 2**n, model)
    scores = [sieve_algorithmic(PureState.basis(n, k), model) for k in range(2**n)]
    return fsum(scores) / 2**n
