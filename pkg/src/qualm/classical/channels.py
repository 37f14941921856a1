# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
from scipy import stats
from scipy.ndimage import convolve1d

from ..core.errors import DimensionError
from .probability import (
    PRUNE_BELOW,
    ChannelKernel,
    FiniteProbability,
    GridProbability1D,
)

GAUSSIAN_TRUNCATION = 5.0


def _input_weights(f: ChannelKernel, p: FiniteProbability) -> np.ndarray:
    support = p.support()
    if support[-1] >= f.input_count:
        raise DimensionError(
            f'The channel has no row for input {int(support[-1])}: it only defines '
            f'{f.input_count} inputs.'
        )
    weights = np.zeros(f.input_count)
    weights[support] = p.weights[support]
    return weights


def apply_channel(f: ChannelKernel, p: FiniteProbability) -> FiniteProbability:
    """
    Process a probability through a channel, ``fp(x) = sum_z f(x|z) p(z)``.

    Output weights below ``1e-15`` are pruned before renormalizing.

    Parameters
    ----------
    f:
        The channel kernel.
    p:
        The input probability. Its support must lie within the kernel's inputs.
    """
    return FiniteProbability.from_unnormalized(
        _input_weights(f, p) @ f.matrix, prune_below=PRUNE_BELOW
    )


def coarsen_kernel(n: int, block: int) -> ChannelKernel:
    """
    The deterministic channel ``z -> floor(z / block)`` on ``n`` inputs.

    Parameters
    ----------
    n:
        Number of inputs.
    block:
        Number of consecutive inputs merged into one output. Must divide ``n``.
    """
    if block < 1 or n < 1 or n % block != 0:
        raise DimensionError(f'Block size {block} does not divide {n} inputs.')
    matrix = np.zeros((n, n // block))
    matrix[np.arange(n), np.arange(n) // block] = 1.0
    return ChannelKernel(matrix)


def gaussian_kernel(sigma: float, spacing: float) -> np.ndarray:
    """
    Grid-sampled Gaussian truncated at five standard deviations and normalized.

    Parameters
    ----------
    sigma:
        Standard deviation, in the units of ``spacing``.
    spacing:
        Grid spacing.
    """
    half = int(np.ceil(GAUSSIAN_TRUNCATION * sigma / spacing))
    offsets = spacing * np.arange(-half, half + 1)
    kernel = np.exp(-0.5 * (offsets / sigma) ** 2)
    return kernel / kernel.sum()


def gaussian_convolve(p: GridProbability1D, sigma: float) -> GridProbability1D:
    """
    Convolve a grid probability with a Gaussian, keeping the same grid.

    Mass spilling over the grid boundaries is discarded and the result renormalized.

    Parameters
    ----------
    p:
        The grid probability.
    sigma:
        Standard deviation of the Gaussian, must be positive.
    """
    if not sigma > 0:
        raise DimensionError(f'The Gaussian width must be positive, got {sigma}.')
    smeared = convolve1d(
        p.weights, gaussian_kernel(sigma, p.spacing), mode='constant', cval=0.0
    )
    out = FiniteProbability.from_unnormalized(smeared)
    return GridProbability1D(p.origin, p.spacing, out.weights)


def shannon_entropy(p: FiniteProbability) -> float:
    """Shannon entropy of a probability, in bits."""
    return float(stats.entropy(p.weights, base=2))


def shannon_mutual_information(f: ChannelKernel, p: FiniteProbability) -> float:
    """
    Shannon mutual information between the input and output of a channel, in bits.

    Parameters
    ----------
    f:
        The channel kernel.
    p:
        The input probability.
    """
    weights = _input_weights(f, p)
    output = weights @ f.matrix
    noise = sum(
        w * stats.entropy(row, base=2)
        for w, row in zip(weights, f.matrix, strict=True)
        if w > 0
    )
    return max(0.0, float(stats.entropy(output, base=2) - noise))


def compose(first: ChannelKernel, second: ChannelKernel) -> ChannelKernel:
    """
    The channel that applies ``first`` and then ``second``.

    Parameters
    ----------
    first:
        Channel applied to the input.
    second:
        Channel applied to the output of ``first``.
    """
    if first.output_count != second.input_count:
        raise DimensionError(
            f'Cannot chain {first.output_count} outputs into {second.input_count} '
            'inputs.'
        )
    return ChannelKernel(first.matrix @ second.matrix)
