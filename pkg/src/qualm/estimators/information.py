# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
from scipy.special import logsumexp

from ..classical.probability import FiniteProbability
from .encoding import OutcomeEncoding
from .models import ComplexityModel

LN2 = np.log(2.0)


def k_hat(model: ComplexityModel, x: bytes, side: bytes = b'') -> float:
    """
    Estimated complexity of ``x`` given ``side``, in bits.

    Parameters
    ----------
    model:
        The complexity model.
    x:
        The string.
    side:
        The auxiliary string, e.g. the decimal number of qubits.
    """
    return model.base_complexity(x, side)


def mutual_info_hat(
    model: ComplexityModel, i: int, j: int, enc: OutcomeEncoding, side: bytes = b''
) -> float:
    """
    Estimated algorithmic mutual information between outcomes ``i`` and ``j``,
    ``max(0, K(i) + K(j) - K(i, j))`` with the joint complexity taken over the
    cheaper chain-rule order.

    Parameters
    ----------
    model:
        The complexity model.
    i, j:
        Outcome indices.
    enc:
        How outcomes are written as strings.
    side:
        The auxiliary string.
    """
    return model.mutual_information(enc.encode(i), enc.encode(j), side)


def mutual_info_matrix(
    model: ComplexityModel,
    outcomes: np.ndarray,
    enc: OutcomeEncoding,
    side: bytes = b'',
) -> np.ndarray:
    """
    Pairwise estimated mutual information of the given outcomes.

    Parameters
    ----------
    model:
        The complexity model.
    outcomes:
        Outcome indices.
    enc:
        How outcomes are written as strings.
    side:
        The auxiliary string.
    """
    strings = [enc.encode(int(k)) for k in outcomes]
    return model.mutual_information_matrix(strings, side)


def self_info_hat(
    model: ComplexityModel,
    p: FiniteProbability,
    enc: OutcomeEncoding,
    side: bytes = b'',
) -> float:
    """
    Estimated self-information ``log2 sum_ij 2^I(i:j) p(i) p(j)`` of a probability.

    The sum runs over the support of ``p`` and is accumulated in log space.
    A point mass at ``k`` gives exactly ``mutual_info_hat(model, k, k)``.

    Parameters
    ----------
    model:
        The complexity model.
    p:
        The probability over outcome indices.
    enc:
        How outcomes are written as strings.
    side:
        The auxiliary string.
    """
    support = p.support()
    if support.size == 1:
        k = int(support[0])
        return mutual_info_hat(model, k, k, enc, side)
    info = mutual_info_matrix(model, support, enc, side)
    if not info.any():
        return 0.0
    weights = p.weights[support]
    total = logsumexp(info * LN2, b=np.outer(weights, weights)) / LN2
    return max(0.0, float(total))
