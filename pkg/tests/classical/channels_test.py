# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
import pytest

from qualm.classical.channels import (
    apply_channel,
    coarsen_kernel,
    compose,
    gaussian_convolve,
    gaussian_kernel,
    shannon_entropy,
    shannon_mutual_information,
)
from qualm.classical.probability import (
    ChannelKernel,
    FiniteProbability,
    GridProbability1D,
)
from qualm.core.errors import DimensionError


def random_kernel(generator, inputs, outputs):
    return ChannelKernel(generator.dirichlet(np.ones(outputs), size=inputs))


def test_identity_channel_is_noop():
    p = FiniteProbability([0.1, 0.2, 0.3, 0.4])
    out = apply_channel(ChannelKernel.identity(4), p)
    assert np.array_equal(out.weights, p.weights)


def test_coarsen_merges_blocks():
    p = FiniteProbability([0.1, 0.2, 0.3, 0.4])
    q = apply_channel(coarsen_kernel(4, 2), p)
    assert np.allclose(q.weights, [0.3, 0.7])


def test_coarsen_requires_divisor():
    with pytest.raises(DimensionError, match='does not divide'):
        coarsen_kernel(6, 4)


def test_apply_channel_rejects_support_beyond_inputs():
    p = FiniteProbability.point_mass(5, 8)
    with pytest.raises(DimensionError, match='no row for input 5'):
        apply_channel(ChannelKernel.identity(4), p)


def test_gaussian_kernel_is_normalized_and_symmetric():
    kernel = gaussian_kernel(2.0, 1.0)
    assert kernel.sum() == pytest.approx(1.0)
    assert np.allclose(kernel, kernel[::-1])
    assert kernel.size == 21


def test_gaussian_convolve_preserves_mean_away_from_edges():
    weights = np.zeros(101)
    weights[50] = 1.0
    out = gaussian_convolve(GridProbability1D(0.0, 1.0, weights), 3.0)
    assert out.mean() == pytest.approx(50.0)
    assert out.variance() == pytest.approx(9.0, rel=1e-3)


def test_gaussian_convolve_rejects_nonpositive_width():
    grid = GridProbability1D(0.0, 1.0, [1.0])
    with pytest.raises(DimensionError, match='width'):
        gaussian_convolve(grid, 0.0)


def test_shannon_entropy():
    assert shannon_entropy(FiniteProbability.uniform(8)) == pytest.approx(3.0)
    assert shannon_entropy(FiniteProbability.point_mass(2, 8)) == 0.0


def test_mutual_information_of_identity_is_entropy():
    p = FiniteProbability([0.5, 0.25, 0.25])
    mi = shannon_mutual_information(ChannelKernel.identity(3), p)
    assert mi == pytest.approx(1.5)


def test_mutual_information_of_constant_channel_is_zero():
    f = ChannelKernel.constant(FiniteProbability.uniform(3), 4)
    mi = shannon_mutual_information(f, FiniteProbability.uniform(4))
    assert mi == pytest.approx(0.0, abs=1e-12)


def test_processing_never_increases_mutual_information(generator):
    for _ in range(20):
        p = FiniteProbability(generator.dirichlet(np.ones(5)))
        first = random_kernel(generator, 5, 4)
        second = random_kernel(generator, 4, 3)
        before = shannon_mutual_information(first, p)
        after = shannon_mutual_information(compose(first, second), p)
        assert after <= before + 1e-12


def test_compose_matches_sequential_application(generator):
    p = FiniteProbability(generator.dirichlet(np.ones(3)))
    first = random_kernel(generator, 3, 4)
    second = random_kernel(generator, 4, 2)
    direct = apply_channel(compose(first, second), p)
    sequential = apply_channel(second, apply_channel(first, p))
    assert np.allclose(direct.weights, sequential.weights)


def test_compose_rejects_mismatch():
    with pytest.raises(DimensionError, match='Cannot chain'):
        compose(ChannelKernel.identity(2), ChannelKernel.identity(3))


def test_apply_channel_matches_double_loop(generator):
    p = FiniteProbability([0.5, 0.3, 0.2])
    f = random_kernel(generator, 3, 3)
    expected = np.zeros(3)
    for x in range(3):
        for z in range(3):
            expected[x] += f.matrix[z, x] * p.weights[z]
    out = apply_channel(f, p)
    assert np.allclose(out.weights, expected, rtol=0, atol=1e-12)


@pytest.mark.parametrize('alpha', [0.0, 0.25, 0.5, 1.0])
def test_apply_channel_is_linear(generator, alpha):
    p = generator.dirichlet(np.ones(4))
    q = generator.dirichlet(np.ones(4))
    f = random_kernel(generator, 4, 3)
    mixed = apply_channel(f, FiniteProbability(alpha * p + (1 - alpha) * q))
    separate = alpha * apply_channel(f, FiniteProbability(p)).weights + (
        1 - alpha
    ) * apply_channel(f, FiniteProbability(q)).weights
    assert np.allclose(mixed.weights, separate, rtol=0, atol=1e-12)


def interior_grid(generator, start, cells=201):
    weights = np.zeros(cells)
    weights[start : start + 21] = generator.dirichlet(np.ones(21))
    return weights


def test_gaussian_convolve_adds_variance(generator):
    p = GridProbability1D(0.0, 1.0, interior_grid(generator, 90))
    out = gaussian_convolve(p, 4.0)
    assert out.weights.sum() == pytest.approx(1.0, abs=1e-9)
    assert out.variance() == pytest.approx(p.variance() + 16.0, rel=0.02)


def test_gaussian_convolve_is_translation_covariant(generator):
    weights = interior_grid(generator, 80)
    out = gaussian_convolve(GridProbability1D(0.0, 1.0, weights), 4.0).weights
    shifted = gaussian_convolve(
        GridProbability1D(0.0, 1.0, np.roll(weights, 1)), 4.0
    ).weights
    assert np.allclose(shifted[1:], out[:-1], rtol=0, atol=1e-9)
    assert shifted[0] == pytest.approx(0.0, abs=1e-9)
