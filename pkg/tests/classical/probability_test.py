# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
import pytest

from qualm.classical.probability import (
    ChannelKernel,
    FiniteProbability,
    GridProbability1D,
    mixture,
)
from qualm.core.errors import DimensionError, NotNormalizedError, NotPositiveError


def test_point_mass():
    p = FiniteProbability.point_mass(3, 8)
    assert p.size == 8
    assert p.as_dict() == {3: 1.0}
    assert list(p.support()) == [3]


def test_uniform():
    p = FiniteProbability.uniform(4)
    assert np.allclose(p.weights, 0.25)
    assert len(p) == 4


def test_from_mapping_defaults_size_to_largest_index():
    p = FiniteProbability.from_mapping({0: 0.5, 5: 0.5})
    assert p.size == 6
    assert p[5] == 0.5


def test_from_mapping_rejects_index_outside_range():
    with pytest.raises(DimensionError, match='outside the range'):
        FiniteProbability.from_mapping({4: 1.0}, size=4)


def test_rejects_wrong_total():
    with pytest.raises(NotNormalizedError, match='sums to'):
        FiniteProbability([0.5, 0.6])


def test_rejects_negative_weight():
    with pytest.raises(NotPositiveError):
        FiniteProbability([1.5, -0.5])


def test_tiny_negative_weights_are_clipped():
    p = FiniteProbability([1.0 + 1e-12, -1e-12])
    assert p.weights[1] == 0.0


def test_weights_are_read_only():
    p = FiniteProbability.uniform(2)
    with pytest.raises(ValueError, match='read-only'):
        p.weights[0] = 1.0


def test_from_unnormalized_renormalizes():
    p = FiniteProbability.from_unnormalized([1.0, 3.0])
    assert np.allclose(p.weights, [0.25, 0.75])


def test_from_unnormalized_prunes_small_weights():
    p = FiniteProbability.from_unnormalized([1.0, 1e-16, 1.0], prune_below=1e-15)
    assert list(p.support()) == [0, 2]


def test_from_unnormalized_keeps_exact_weights():
    weights = np.array([0.1, 0.2, 0.7])
    p = FiniteProbability.from_unnormalized(weights)
    assert np.array_equal(p.weights, weights)


def test_from_unnormalized_rejects_all_zero():
    with pytest.raises(NotNormalizedError, match='vanish'):
        FiniteProbability.from_unnormalized([0.0, 0.0])


def test_permuted_moves_weights():
    p = FiniteProbability([0.1, 0.2, 0.7])
    q = p.permuted([2, 0, 1])
    assert np.allclose(q.weights, [0.2, 0.7, 0.1])


def test_permuted_rejects_non_permutation():
    with pytest.raises(DimensionError, match='permutation'):
        FiniteProbability.uniform(3).permuted([0, 0, 1])


def test_mixture():
    p = mixture(
        [FiniteProbability.point_mass(0, 2), FiniteProbability.point_mass(1, 2)],
        [0.25, 0.75],
    )
    assert np.allclose(p.weights, [0.25, 0.75])


def test_mixture_rejects_mismatched_sizes():
    with pytest.raises(DimensionError, match='different sizes'):
        mixture(
            [FiniteProbability.uniform(2), FiniteProbability.uniform(3)], [0.5, 0.5]
        )


def test_kernel_rows():
    f = ChannelKernel([[1.0, 0.0], [0.5, 0.5], [0.0, 1.0]])
    assert f.input_count == 3
    assert f.output_count == 2
    assert f.rows[1].as_dict() == {0: 0.5, 1: 0.5}


def test_kernel_rejects_bad_row():
    with pytest.raises(NotNormalizedError, match='Kernel row 1'):
        ChannelKernel([[1.0, 0.0], [0.5, 0.4]])


def test_kernel_from_rows_and_constant():
    out = FiniteProbability([0.3, 0.7])
    f = ChannelKernel.constant(out, 4)
    assert f.matrix.shape == (4, 2)
    g = ChannelKernel.from_rows([out] * 4)
    assert np.array_equal(f.matrix, g.matrix)


def test_grid_moments():
    grid = GridProbability1D(1.0, 0.5, [0.5, 0.0, 0.5])
    assert np.allclose(grid.positions, [1.0, 1.5, 2.0])
    assert grid.mean() == pytest.approx(1.5)
    assert grid.variance() == pytest.approx(0.25)
    assert grid.as_finite().size == 3


def test_grid_rejects_nonpositive_spacing():
    with pytest.raises(DimensionError, match='spacing'):
        GridProbability1D(0.0, 0.0, [1.0])
